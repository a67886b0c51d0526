from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional


@dataclass(frozen=True)
class RunConfig:
    """Parámetros validados de una ejecución por línea de comandos"""
    command: str
    target: str
    order: Optional[int] = None
    modulus: Optional[int] = None
    precision: int = 192
    lo: Optional[int] = None
    hi: Optional[int] = None
    output: Optional[str] = None
    format: str = 'text'

    def as_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data.pop('output')
        return data
