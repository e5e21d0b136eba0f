"""Conjunctive table algebra engine: tables, SPJR-style operations, a
conjunctive-calculus evaluator and the law-checking harness."""

from ._ctab import (
    Algebra,
    CtabError,
    Formula,
    Structure,
    Table,
    act,
    check_axioms,
    decompose,
    delete_column,
    delete_columns,
    dim,
    evaluate,
    evaluate_oracle,
    join,
    outer_compose,
    parse_formula,
    parse_tsv,
    project,
    select_eq,
    table_compose,
    table_leq,
)

__all__ = [
    "Algebra",
    "CtabError",
    "Formula",
    "Structure",
    "Table",
    "act",
    "check_axioms",
    "decompose",
    "delete_column",
    "delete_columns",
    "dim",
    "evaluate",
    "evaluate_oracle",
    "join",
    "outer_compose",
    "parse_formula",
    "parse_tsv",
    "project",
    "select_eq",
    "table_compose",
    "table_leq",
]
