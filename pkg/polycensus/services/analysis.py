"""
Structural analysis reports for single matrices, families and systems
"""
from typing import List, Sequence

from loguru import logger

from polycensus.core.exceptions import FieldError, SingularMatrixError
from polycensus.models.code import ConvCode
from polycensus.models.polymatrix import PolyMatrix
from polycensus.models.system import StateSpace
from polycensus.services.canonical_forms import hermite_form, kronecker_hermite_form
from polycensus.services.convcode import code_from_system
from polycensus.services.primeness import (
    block_bidiagonal,
    is_left_prime,
    is_right_prime,
    is_unimodular,
    mutually_left_coprime,
    pairwise_left_coprime,
    rank_drop_witness,
)
from polycensus.services.systems import (
    is_minimal,
    is_observable,
    is_reachable,
    right_coprime_factorization,
)
from polycensus.utils.parsing import AnalysisInput


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _indent(matrix: PolyMatrix, prefix: str = "    ") -> List[str]:
    return [prefix + line for line in str(matrix).splitlines()]


def _witness(matrix: PolyMatrix) -> str:
    try:
        found = rank_drop_witness(matrix)
    except FieldError as e:
        return f"witness unavailable: {e}"
    if found is None:
        return "no rank drop"
    k, point = found
    return f"rank drop at {point!r} in GF({matrix.field.characteristic}^{k})"


class Analyzer:
    """Builds human-readable reports for the analyze command"""

    def analyze(self, parsed: AnalysisInput) -> List[str]:
        logger.debug(f"Analysing {parsed.kind} over {parsed.field!r}")
        if parsed.kind == "matrix":
            return self.matrix_report(parsed.payload)
        if parsed.kind == "family":
            return self.family_report(parsed.payload)
        if parsed.kind == "generator":
            return self.generator_report(parsed.payload)
        return self.system_report(parsed.payload)

    def matrix_report(self, matrix: PolyMatrix) -> List[str]:
        lines = [f"{matrix.rows}x{matrix.cols} polynomial matrix over {matrix.field!r}"]
        lines += _indent(matrix)
        lines.append(f"column degrees: {list(matrix.column_degrees())}")
        lines.append(f"column proper: {_yes(matrix.is_column_proper())}")
        if matrix.rows <= matrix.cols:
            left = is_left_prime(matrix)
            lines.append(f"left prime: {_yes(left)}" + ("" if left else f" ({_witness(matrix)})"))
        if matrix.cols <= matrix.rows:
            right = is_right_prime(matrix)
            lines.append(f"right prime: {_yes(right)}" + ("" if right else f" ({_witness(matrix.T)})"))
        if not matrix.is_square:
            return lines

        det = matrix.det()
        lines.append(f"det: {det}")
        if det.is_zero:
            lines.append("singular: no Hermite or Kronecker-Hermite form")
            return lines
        lines.append(f"unimodular: {_yes(is_unimodular(matrix))}")
        form, _ = hermite_form(matrix)
        if form.matrix == PolyMatrix.identity(matrix.field, matrix.rows):
            lines.append("Hermite form = I")
        else:
            lines.append(f"Hermite form (kappa = {list(form.kappa)}, simple: {_yes(form.is_simple)}):")
            lines += _indent(form.matrix)
        kh, _ = kronecker_hermite_form(matrix)
        lines.append(f"Kronecker-Hermite form (column degrees {list(kh.column_degrees)}):")
        lines += _indent(kh.matrix)
        return lines

    def family_report(self, blocks: Sequence[PolyMatrix]) -> List[str]:
        lines = [f"family of {len(blocks)} matrices over {blocks[0].field!r}"]
        for i, block in enumerate(blocks, start=1):
            lines.append(f"D{i}:")
            lines += _indent(block)
        pairwise = pairwise_left_coprime(*blocks)
        lines.append(f"pairwise left coprime: {_yes(pairwise)}")
        try:
            mutual = mutually_left_coprime(*blocks)
        except SingularMatrixError as e:
            lines.append(f"mutually left coprime: undefined ({e})")
            return lines
        if mutual:
            lines.append("mutually left coprime: yes")
        else:
            lines.append(f"mutually left coprime: NO (block matrix singular, {_witness(block_bidiagonal(blocks))})")
        return lines

    def generator_report(self, generator: PolyMatrix) -> List[str]:
        code = ConvCode(generator)
        lines = [f"rate {code.rate} code over {generator.field!r}, generator:"]
        lines += _indent(generator)
        lines.append(f"degree: {code.degree}")
        lines.append(f"order: {code.order}")
        lines.append(f"minimal basis: {_yes(generator.is_column_proper())}")
        right = is_right_prime(generator)
        verdict = "non-catastrophic" if right else "catastrophic"
        lines.append(f"{verdict} (right-prime: {_yes(right)})")
        return lines

    def system_report(self, system: StateSpace) -> List[str]:
        lines = [f"system with n={system.n}, m={system.m}, p={system.p} over {system.field!r}"]
        reachable = is_reachable(system.A, system.B)
        lines.append(f"reachable: {_yes(reachable)}")
        lines.append(f"observable: {_yes(is_observable(system.A, system.C))}")
        lines.append(f"minimal: {_yes(is_minimal(system))}")

        fraction = right_coprime_factorization(system)
        lines.append(f"McMillan degree: {fraction.mcmillan_degree}")
        lines.append("coprime fraction numerator P:")
        lines += _indent(fraction.P)
        lines.append("denominator Q (Kronecker-Hermite):")
        lines += _indent(fraction.denominator)

        code = code_from_system(system)
        lines.append(f"induced code: rate {code.rate}, degree {code.degree}, order {code.order}")
        right = is_right_prime(code.generator)
        lines.append(f"{'non-catastrophic' if right else 'catastrophic'} (right-prime: {_yes(right)})")
        lines += _indent(code.generator)
        return lines


# Singleton instance
analyzer = Analyzer()
