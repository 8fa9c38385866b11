"""Single-complex commands: each returns a report tree and whether its checks hold."""

import logging
from typing import Any, Callable, Dict, Optional, Tuple

from ..compress.certificate import check_non_extendable_characterization, compress
from ..config.config_loader import ComplexDocument, load_subgroup_file
from ..core.session import Session
from ..error_handling.errors import InputError
from ..freeness.criteria import (
    MAX_SEARCH_GROUND_SET,
    is_free,
    is_free_all_faces,
    max_free_rank_real,
    orbit_free_on_cells,
    rank_bound,
)
from ..freeness.halperin_carlsson import hc_verify
from ..freeness.subgroup import SubgroupKind, SubgroupSpec
from ..hochster.betti import betti_table
from ..hochster.verify import check_parity_identity, check_support_bound
from ..macx.poincare import degree_bound_holds, poincare_generalized, poincare_rzk, poincare_zk
from ..oracle.cells import MAX_ORACLE_GROUND_SET
from ..oracle.validate import cross_validate
from ..powerset.functions import as_polynomial, mobius
from ..simplicial.complex import SimplicialComplex, indicator
from .job import Command, JobConfig


logger = logging.getLogger(__name__)

Report = Tuple[Dict[str, Any], bool]


def describe_complex(K: SimplicialComplex) -> Dict[str, Any]:
    return {
        "m": K.m,
        "maximal_faces": [list(K.to_labels(face)) for face in K.maximal_faces],
        "dim": K.dim,
        "f_vector": K.f_vector(),
    }


def _mobius(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    f = indicator(doc.complex)
    transform = mobius(f)
    report = {
        "support_size": f.support_size(),
        "mobius_support_size": transform.support_size(),
        "mobius_support": [list(doc.complex.to_labels(mask)) for mask in transform.support_masks()],
        "polynomial": as_polynomial(f),
    }
    return report, True


def _betti(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    K = doc.complex
    table = betti_table(K, job.field, pool=session.pool)
    logger.info(f"Graded Betti table over {job.field.value}:\n{table.format_graded()}")
    parity = check_parity_identity(K, job.field, table=table)
    bound = check_support_bound(K, job.field, table=table)
    report = {
        "betti": table.to_dict(),
        "graded": [{"i": i, "j": j, "beta": beta} for (i, j), beta in sorted(table.graded().items())],
        "projective_dimension": table.projective_dimension(),
        "parity": parity.to_dict(),
        "support_bound": bound.to_dict(),
    }
    return report, parity.holds and bound.holds


def _poincare(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    K = doc.complex
    table = betti_table(K, job.field, pool=session.pool)
    if job.kappa is not None:
        P = poincare_generalized(table, job.kappa)
        report = {
            "field": job.field.value,
            "kappa": list(job.kappa.kappa),
            "poincare": P.to_dict(),
            "euler_characteristic": P.euler_characteristic(),
        }
        return report, P.coefficient(0) == 1
    zk = poincare_zk(K, job.field, table=table)
    rzk = poincare_rzk(K, job.field, table=table)
    report = {
        "field": job.field.value,
        "zk": zk.to_dict(),
        "rzk": rzk.to_dict(),
        "totals_agree": zk.total_dim() == rzk.total_dim(),
        "degree_bound": degree_bound_holds(zk, K),
    }
    return report, report["totals_agree"] and report["degree_bound"]


def _compress(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    f = indicator(doc.complex)
    certificate = compress(f, job.policy)
    characterization = check_non_extendable_characterization(f)
    report = {
        "policy": job.policy.value,
        "certificate": certificate.to_dict(),
        "trace": [
            {"k": step.k, "support_size": step.support_size, "mobius_support_size": step.mobius_support_size}
            for step in certificate.trace
        ],
        "characterization_holds": characterization,
    }
    return report, certificate.holds and characterization


def _oracle_check(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    report = cross_validate(doc.complex, job.field)
    return report.to_dict(), report.holds


def _subgroup(doc: ComplexDocument, job: JobConfig) -> Optional[SubgroupSpec]:
    if job.subgroup_path is not None:
        return load_subgroup_file(job.subgroup_path, doc.complex.m)
    return doc.subgroup


def _freeness(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    K = doc.complex
    H = _subgroup(doc, job)
    if H is None:
        raise InputError("freeness needs a subgroup block in the input or --subgroup")
    free = is_free(H, K)
    all_faces = is_free_all_faces(H, K)
    report: Dict[str, Any] = {
        "subgroup": H.to_dict(),
        "free": free,
        "free_all_faces": all_faces,
        "rank_bound": rank_bound(K),
    }
    ok = free == all_faces
    if H.kind is SubgroupKind.REAL and K.m <= MAX_ORACLE_GROUND_SET:
        literal = orbit_free_on_cells(H, K)
        report["free_on_cells"] = literal
        ok = ok and literal == free
    if free:
        report["rank_within_bound"] = H.r <= rank_bound(K)
        ok = ok and report["rank_within_bound"]
    return report, ok


def _hc_verify(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    K = doc.complex
    H = _subgroup(doc, job)
    searched = False
    if H is None:
        if K.m > MAX_SEARCH_GROUND_SET:
            raise InputError(f"hc-verify needs a subgroup when m > {MAX_SEARCH_GROUND_SET}")
        _, H = max_free_rank_real(K, pool=session.pool)
        searched = True
    result = hc_verify(K, H, job.field)
    report = {"subgroup": H.to_dict(), "searched": searched, "field": job.field.value, **result.to_dict()}
    return report, result.holds


COMMANDS: Dict[Command, Callable[[ComplexDocument, JobConfig, Session], Report]] = {
    Command.MOBIUS: _mobius,
    Command.BETTI: _betti,
    Command.POINCARE: _poincare,
    Command.COMPRESS: _compress,
    Command.ORACLE_CHECK: _oracle_check,
    Command.FREENESS: _freeness,
    Command.HC_VERIFY: _hc_verify,
}


def run_single(doc: ComplexDocument, job: JobConfig, session: Session) -> Report:
    report, ok = COMMANDS[job.command](doc, job, session)
    tree = {"command": job.command.value, "input": doc.source, "complex": describe_complex(doc.complex)}
    tree.update(report)
    tree["holds"] = ok
    return tree, ok
