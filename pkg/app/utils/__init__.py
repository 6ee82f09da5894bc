__all__ = [
    "config",
    "errors",
    "logging_utils",
    "election",
    "recognition",
    "nomination",
    "generators",
    "profile_io",
]
