from .parser import ProfileDocument, decode_profile, parse_profile, read_document
from .report import FORMATS, STRUCTURED, TEXT, axis_names, score_table_rows, serialize_report
from .serializer import serialize_profile

__all__ = [
    "ProfileDocument",
    "decode_profile",
    "parse_profile",
    "read_document",
    "serialize_profile",
    "serialize_report",
    "score_table_rows",
    "axis_names",
    "FORMATS",
    "TEXT",
    "STRUCTURED",
]
