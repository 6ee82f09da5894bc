__all__ = [
    "recognition_service",
    "equilibrium_service",
    "president_service",
    "oracle_service",
    "check_service",
]
