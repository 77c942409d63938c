"""Exact computation with right ideals of free group algebras."""

try:
    from ._fga import (  # noqa: F401
        FgaError,
        FgaParseError,
        basis,
        check_crs,
        compare,
        divide,
        express,
        matrix_c,
        member,
        oracle_member,
        reduce,
        transversal,
        validate_order,
    )
except ImportError:  # in-tree builds keep the extension next to the package
    from _fga import (  # noqa: F401
        FgaError,
        FgaParseError,
        basis,
        check_crs,
        compare,
        divide,
        express,
        matrix_c,
        member,
        oracle_member,
        reduce,
        transversal,
        validate_order,
    )

__all__ = [
    "FgaError",
    "FgaParseError",
    "basis",
    "check_crs",
    "compare",
    "divide",
    "express",
    "matrix_c",
    "member",
    "oracle_member",
    "reduce",
    "transversal",
    "validate_order",
]
