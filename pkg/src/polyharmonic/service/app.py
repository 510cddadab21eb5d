"""HTTP facade over the solvers and verification batteries."""

from __future__ import annotations

from fastapi import FastAPI

from .. import __version__
from ..solvers import SolutionReport, clifford_sweep, discriminant_condition, solve_clifford, solve_hypersphere
from ..suites import run_suite
from .models import (
    CheckResult,
    CliffordRequest,
    CliffordResponse,
    CliffordSolution,
    HypersphereRequest,
    HypersphereSolution,
    SweepRequest,
    SweepResponse,
    SweepRow,
    VerifyRequest,
    VerifyResponse,
)


def _clifford_solution(report: SolutionReport) -> CliffordSolution:
    return CliffordSolution(
        t=report.parameter,
        R1=report.R1,
        R2=report.R2,
        alpha_star=report.alpha_star,
        kind=report.kind.value,
        stable=report.stable,
        residuals=report.residuals,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="polyharmonic",
        version=__version__,
        description="Critical radii of polyharmonic hypersphere and Clifford-torus immersions, with multi-route verification.",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/hypersphere", response_model=HypersphereSolution)
    def hypersphere(req: HypersphereRequest) -> HypersphereSolution:
        report = solve_hypersphere(req.r)
        return HypersphereSolution(
            radius=report.parameter,
            alpha_star=report.alpha_star,
            kind=report.kind.value,
            stable=report.stable,
            residuals=report.residuals,
        )

    @app.post("/clifford", response_model=CliffordResponse)
    def clifford(req: CliffordRequest) -> CliffordResponse:
        reports = solve_clifford(req.p, req.q, req.r)
        disc = discriminant_condition(req.p, req.q, req.r) if req.r >= 3 else None
        return CliffordResponse(discriminant=disc, solutions=[_clifford_solution(rep) for rep in reports])

    @app.post("/sweep", response_model=SweepResponse)
    def sweep(req: SweepRequest) -> SweepResponse:
        rows = clifford_sweep(
            (req.p_range.lo, req.p_range.hi),
            (req.q_range.lo, req.q_range.hi),
            (req.r_range.lo, req.r_range.hi),
        )
        return SweepResponse(rows=[SweepRow(**row) for row in rows])

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        checks = [
            CheckResult(
                name=rep.name,
                max_residual=rep.max_residual,
                samples=rep.samples,
                passed=rep.passed,
                tolerance=rep.tolerance,
            )
            for rep in run_suite(req.suite, req.tol)
        ]
        return VerifyResponse(passed=all(c.passed for c in checks), checks=checks)

    return app


app = create_app()
