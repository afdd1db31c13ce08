"""Free-group words over a named generator alphabet, and presentations.

A letter is a nonzero int: ``+(k+1)`` is generator ``k``, ``-(k+1)`` its
inverse.  Words are immutable; everything downstream (builders, the
enumerator, the oracle) works over these.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class WordSyntaxError(ValueError):
    """Raised on malformed word text or unknown generator names."""


def _reduce_letters(letters):
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; the empty word is the identity."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce_letters(self.letters))

    @classmethod
    def gen(cls, index, power=1):
        """The word g^power for generator number ``index`` (0-based)."""
        letter = index + 1 if power >= 0 else -(index + 1)
        return cls((letter,) * abs(power))

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k)

    def inverse(self):
        return Word(tuple(-x for x in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)


IDENTITY = Word()


def free_reduce(w: Word) -> Word:
    """Freely reduce (idempotent; Word construction already reduces)."""
    return Word(w.letters)


def word_invert(w: Word) -> Word:
    return w.inverse()


def commutator(a: Word, b: Word) -> Word:
    return a * b * a.inverse() * b.inverse()


@dataclass(frozen=True)
class Presentation:
    """Generators, relators, and generators marked central.

    ``central`` entries are (name, finite order) pairs; the matching power
    and commutator relators are ordinary relators (use :meth:`build` to
    have them generated automatically).
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    central: tuple[tuple[str, int], ...] = ()
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        object.__setattr__(self, "central", tuple(tuple(c) for c in self.central))
        object.__setattr__(
            self, "_index", {name: i for i, name in enumerate(self.generators)}
        )

    @classmethod
    def build(cls, generators, relators, central=()):
        """Construct, appending power/commutator relators for central gens."""
        generators = tuple(generators)
        relators = list(relators)
        central = tuple(tuple(c) for c in central)
        index = {name: i for i, name in enumerate(generators)}
        central_names = [name for name, _ in central]
        for name, order in central:
            g = Word.gen(index[name])
            relators.append(g ** order)
        for name, _ in central:
            g = Word.gen(index[name])
            for other in generators:
                if other == name:
                    continue
                if other in central_names and central_names.index(other) < central_names.index(name):
                    continue  # [h,g] already added from the earlier central
                h = Word.gen(index[other])
                relators.append(commutator(g, h))
        p = cls(generators, tuple(relators), central)
        p.validate()
        return p

    @property
    def rank(self):
        return len(self.generators)

    def gen_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise WordSyntaxError(f"unknown generator {name!r}") from None

    def gen(self, name: str) -> Word:
        return Word.gen(self.gen_index(name))

    def validate(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise ValueError("duplicate generator names")
        for w in self.relators:
            for x in w:
                if not 1 <= abs(x) <= n:
                    raise ValueError(f"relator letter {x} out of range")
        relset = {w.letters for w in self.relators}
        for name, order in self.central:
            g = Word.gen(self.gen_index(name))
            if (g ** order).letters not in relset:
                raise ValueError(f"missing power relator for central {name}")
            for other in self.generators:
                if other == name:
                    continue
                h = Word.gen(self.gen_index(other))
                if (commutator(g, h).letters not in relset
                        and commutator(h, g).letters not in relset):
                    raise ValueError(f"missing commutator [{name},{other}]")

    def to_json(self) -> str:
        data = {
            "central": [{"name": n, "order": k} for n, k in self.central],
            "generators": list(self.generators),
            "relators": [render_word(w, self) for w in self.relators],
        }
        return json.dumps(data, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        data = json.loads(text)
        generators = tuple(data["generators"])
        p0 = cls(generators, ())
        relators = tuple(parse_word(t, p0) for t in data["relators"])
        central = tuple((c["name"], int(c["order"])) for c in data.get("central", []))
        p = cls(generators, relators, central)
        p.validate()
        return p


def parse_word(text: str, p: Presentation) -> Word:
    """Parse whitespace-separated tokens ``name``, ``name^k`` (k integer).

    The token ``1`` denotes the identity.
    """
    letters = []
    for token in text.split():
        if token == "1":
            continue
        name, sep, exp = token.partition("^")
        if sep:
            try:
                k = int(exp)
            except ValueError:
                raise WordSyntaxError(f"malformed exponent in {token!r}") from None
        else:
            k = 1
        idx = p.gen_index(name)
        letters.extend(Word.gen(idx, k).letters)
    return Word(tuple(letters))


def render_word(w: Word, p: Presentation) -> str:
    """Inverse of parse_word on reduced words; runs re-compress to ^k."""
    if not w:
        return "1"
    parts = []
    run_letter, run = None, 0
    for x in list(w.letters) + [0]:
        if x == run_letter:
            run += 1
            continue
        if run_letter is not None:
            name = p.generators[abs(run_letter) - 1]
            k = run if run_letter > 0 else -run
            parts.append(name if k == 1 else f"{name}^{k}")
        run_letter, run = x, 1
    return " ".join(parts)
