"""Field files, seeded random fields and reports."""

from foliamod.io.fieldfile import (
    FieldFile,
    dump_field,
    load_field_text,
    parse_field_file,
    write_field_file,
)
from foliamod.io.random_fields import random_field, random_fields, random_regular_rep
from foliamod.io.report import ErrorEntry, Report, canonical_digest

__all__ = [
    "canonical_digest",
    "dump_field",
    "ErrorEntry",
    "FieldFile",
    "load_field_text",
    "parse_field_file",
    "random_field",
    "random_fields",
    "random_regular_rep",
    "Report",
    "write_field_file",
]
