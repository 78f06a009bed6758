""" JSON 명세 형식과 결정적 보고서 인코딩

명세 형식: {"m": int, "n": int, "upper": [[re, im, weight], ...], "lower": [[re, im, weight], ...]}
"""
import json
import math
import numbers
from pathlib import Path
from typing import Any, Dict, List, Mapping, Union

from .exceptions import SpecFormatError
from .hspec import HFunctionSpec, ParamPair

__all__ = (
    "spec_from_json",
    "spec_to_json",
    "load_spec",
    "dumps_report",
)

_SPEC_KEYS = ("m", "n", "upper", "lower")


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _parse_pairs(raw: Any, label: str) -> List[ParamPair]:
    if not isinstance(raw, list):
        raise SpecFormatError(f"파라미터 리스트가 배열이 아닙니다. -> {label}")
    pairs = []
    for j, item in enumerate(raw, 1):
        if not (isinstance(item, list) and len(item) == 3 and all(map(_is_number, item))):
            raise SpecFormatError(
                f"파라미터는 [re, im, weight] 형식이어야 합니다. -> {label}[{j}]={item!r}"
            )
        re_, im_, weight = item
        pairs.append(ParamPair(complex(re_, im_), weight))
    return pairs


def spec_from_json(obj: Union[str, Mapping[str, Any]]) -> HFunctionSpec:
    """ JSON 문자열 또는 dict 를 미검증 명세로 변환

    SpecFormatError: 구문/형식 오류
    """
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise SpecFormatError(f"JSON 구문 오류입니다. -> {e}") from e
    if not isinstance(obj, Mapping):
        raise SpecFormatError("명세는 JSON 객체여야 합니다.")

    missing = [key for key in _SPEC_KEYS if key not in obj]
    if missing:
        raise SpecFormatError(f"필수 필드가 없습니다. -> {missing}")
    for key in ("m", "n"):
        if not isinstance(obj[key], int) or isinstance(obj[key], bool):
            raise SpecFormatError(f"정수 필드가 아닙니다. -> {key}={obj[key]!r}")

    return HFunctionSpec(
        obj["m"],
        obj["n"],
        tuple(_parse_pairs(obj["upper"], "upper")),
        tuple(_parse_pairs(obj["lower"], "lower")),
    )


def spec_to_json(spec: HFunctionSpec) -> Dict[str, Any]:
    def encode(pairs):
        return [[x.coeff.real, x.coeff.imag, x.weight] for x in pairs]

    return {
        "m": spec.m,
        "n": spec.n,
        "upper": encode(spec.upper),
        "lower": encode(spec.lower),
    }


def load_spec(path: Union[str, Path]) -> HFunctionSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecFormatError(f"명세 파일을 읽을 수 없습니다. -> {path}") from e
    return spec_from_json(text)


def _encode_float(value: float) -> str:
    if not math.isfinite(value):
        return "null"
    text = format(value, ".17g")
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _encode(value: Any, indent: int, level: int) -> str:
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if value is None or isinstance(value, bool):
        return json.dumps(value)
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return _encode_float(float(value))
    if isinstance(value, numbers.Complex):
        return _encode([float(value.real), float(value.imag)], indent, level)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        items = [
            f"{json.dumps(str(key), ensure_ascii=False)}: {_encode(value[key], indent, level + 1)}"
            for key in sorted(value, key=str)
        ]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [_encode(item, indent, level + 1) for item in value]
        return "[" + pad + ("," + pad).join(items) + end + "]"
    raise TypeError(f"JSON 으로 변환할 수 없는 값입니다. -> {type(value).__name__}")


def dumps_report(report: Mapping[str, Any], indent: int = 2) -> str:
    """ 키 정렬, 17 유효숫자 실수, 비유한 실수는 null, 복소수는 [re, im] """
    return _encode(report, indent, 0) + "\n"
