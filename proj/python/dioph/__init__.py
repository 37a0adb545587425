"""Exact solver for a*x**2 - b*y**2 + c = 0 and general binary quadratic
Diophantine equations: automorphism matrices, fundamental solution orbits,
closed-form surd expressions, conic reduction, and a brute-force
completeness verifier. All arithmetic is exact."""

from dioph._core import (
    AffineAutomorphism,
    AffineTransform,
    Automorphism,
    Classification,
    ClosedForm,
    GeneralQuadratic,
    GeneralSolveResult,
    OrbitAssignment,
    PellEquation,
    PellSolveResult,
    QuadraticNumber,
    ReducedForm,
    Solution,
    SolutionFamily,
    SolutionOrbit,
    VerificationReport,
    back_substitute,
    brute_force,
    brute_force_general,
    build_automorphism,
    cf_sqrt,
    classify,
    coset_preservation_check,
    affine_automorphism,
    derive_closed_form,
    descend,
    enumerate_orbit,
    enumerate_range,
    eval_closed_form,
    evaluate_form,
    evaluate_general,
    family_term,
    gcd_obstruction,
    pell_fundamental,
    reduce,
    solve_definite,
    solve_general,
    solve_json,
    solve_pell,
    solve_square_case,
    verify_completeness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
