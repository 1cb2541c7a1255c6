"""Static acceptance/rejection suite.

Each case is a small program plus the verdict the type checker must reach:
``accept`` fragments must type-check and then run, ``reject`` fragments must
fail type-checking.  The checker is pyright.

Brand escape needs one extra step.  pyright generalizes an unsolved brand of a
generative call instead of reporting it, so every generative call
(``of_int_dyn``, ``of_cols_dyn``, ``loadvec``, ``loadmat``) is also checked
through a probe copy of the fragment in which the call is wrapped in
``reveal_type``.  A revealed type that still mentions a scope-bound brand
variable (named ``_Fresh...``) counts as a type error of the fragment.

pyright does not brand-check the body of a lambda passed to a generative
operation (calls inside it are solved with ``Unknown``), so such lambdas are
reported as errors too.  Scope bodies are written as generic ``def`` functions.
"""

from .harness import (
    CaseResult,
    StaticCase,
    all_cases,
    file_cases,
    lattice_cases,
    main,
    run_suite,
)

__all__ = [
    "CaseResult",
    "StaticCase",
    "all_cases",
    "file_cases",
    "lattice_cases",
    "main",
    "run_suite",
]
