"""Текстовые литералы ключей классов: K+[..], K-[..], T[..], Pi[..], L[..]."""
import re
from typing import List, Optional

from services import group_core as gc
from services.classes import ClassKey, KeyFamily, kminus_key, kplus_key, lambda_key, pi_key, t_key
from services.group_core import Ambient
from services.surfaces import SurfaceSpec

_PREFIX = {
    KeyFamily.KPLUS: "K+",
    KeyFamily.KPLUS_I: "K+",
    KeyFamily.KMINUS: "K-",
    KeyFamily.KMINUS_I: "K-",
    KeyFamily.T: "T",
    KeyFamily.T_I: "T",
    KeyFamily.PI: "Pi",
    KeyFamily.PI_I: "Pi",
    KeyFamily.LAMBDA: "L",
}

_LITERAL = re.compile(r"^(\?)?(K\+|K-|T|Pi|L)\[(.*)\]$")


def format_key(key: ClassKey) -> str:
    parts = [gc.format_word(e) for e in key.entries]
    if key.tag is not None:
        parts.append(f"or={key.tag}")
    if key.maslov is not None:
        parts.append(f"mu={key.maslov}")
    text = f"{_PREFIX[key.family]}[{' | '.join(parts)}]"
    return text if key.certified else "?" + text


def parse_key(surface: SurfaceSpec, text: str) -> ClassKey:
    """Разбирает литерал и канонизирует его; `?` в начале игнорируется.

    Ошибки формата - ValueError, ошибки слов - исключения group_core.
    """
    match = _LITERAL.match(text.strip())
    if match is None:
        raise ValueError(f"некорректный литерал ключа '{text.strip()}'")
    head = match.group(2)
    words: List[str] = []
    tag: Optional[int] = None
    maslov: Optional[int] = None
    for raw in match.group(3).split("|"):
        item = raw.strip()
        if item.startswith("mu="):
            maslov = _int_field(item)
        elif item.startswith("or="):
            tag = _int_field(item)
        else:
            words.append(item)

    refined = maslov is not None

    def stf(n: int) -> gc.GroupElem:
        return gc.parse_word(surface, words[n], Ambient.STF)

    _expect(head, words, {"K+": 2, "K-": 2, "T": 3, "Pi": 2, "L": 1}[head])
    if head == "K+":
        return kplus_key((stf(0), stf(1)), refined=refined, maslov=maslov)
    if head == "K-":
        ambient = Ambient.PTF if surface.orientable else Ambient.STF
        pair = tuple(gc.parse_word(surface, w, ambient) for w in words)
        return kminus_key(pair, refined=refined, maslov=maslov)
    if head == "T":
        return t_key((stf(0), stf(1), stf(2)), refined=refined, maslov=maslov)
    if head == "Pi":
        if tag is None or maslov is None:
            raise ValueError("литерал Pi требует полей or= и mu=")
        return pi_key((stf(0), stf(1), tag, maslov))
    return lambda_key(stf(0))


def _int_field(item: str) -> int:
    try:
        return int(item.partition("=")[2])
    except ValueError:
        raise ValueError(f"поле '{item}' должно быть целым") from None


def _expect(head: str, words: List[str], count: int) -> None:
    if len(words) != count:
        raise ValueError(f"литерал {head} содержит {len(words)} слов вместо {count}")


