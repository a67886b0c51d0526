from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True)
class PochhammerFactor:
    """(q^offset; q^modulus)_∞^exponent"""
    offset: int
    modulus: int
    exponent: int

    def __str__(self) -> str:
        return f'(q^{self.offset};q^{self.modulus})^{self.exponent}'


@dataclass(frozen=True)
class EtaQuotientSpec:
    """
    Producto finito de factores de Pochhammer. Cada factor tiene término
    constante 1, así que cualquier exponente entero es admisible.
    """
    factors: Tuple[PochhammerFactor, ...]

    @classmethod
    def of(cls, *triples: Tuple[int, int, int]) -> 'EtaQuotientSpec':
        """EtaQuotientSpec.of((1, 1, 4), (3, 3, -2)) == (q;q)^4 / (q^3;q^3)^2"""
        return cls(tuple(PochhammerFactor(a, b, e) for a, b, e in triples))

    def normalized(self) -> 'EtaQuotientSpec':
        """Agrupa factores con el mismo (a, b) y descarta exponentes nulos"""
        merged = OrderedDict()
        for factor in self.factors:
            key = (factor.modulus, factor.offset)
            merged[key] = merged.get(key, 0) + factor.exponent
        return EtaQuotientSpec(tuple(
            PochhammerFactor(offset, modulus, exponent)
            for (modulus, offset), exponent in sorted(merged.items())
            if exponent != 0
        ))

    def as_triples(self) -> Iterable[Tuple[int, int, int]]:
        return [(f.offset, f.modulus, f.exponent) for f in self.factors]

    def __str__(self) -> str:
        return ' '.join(str(f) for f in self.factors) or '1'
