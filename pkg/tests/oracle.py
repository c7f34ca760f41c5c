"""Independent reference implementations used by the tests.

Elements are dicts ``{word: Fraction}`` where a word is a tuple of letters
``'a', 'as', 'c', 'cs'``; ``q`` is specialised to ``s0**2`` for a rational
``s0``.  Nothing here imports the package's multiplication or actions.

* :class:`WordAlgebra` normalises words by the rewriting rules of S³_q.
* Actions of ``K, E, F`` come from the 2x2 fundamental representation:
  the generators are matrix coefficients of ``U = [[a, -q c*], [c, a*]]``,
  ``h ▷ u_ij = Σ_k u_ik ρ(h)_kj`` and ``u_ij ◁ h = Σ_k ρ(h)_ik u_kj``,
  extended to words with ``Δ(E) = E⊗K + K⁻¹⊗E`` and ``Δ(K) = K⊗K``.
"""
from __future__ import annotations

from fractions import Fraction

ORDER = {"a": 0, "as": 0, "c": 1, "cs": 2}


class WordAlgebra:
    def __init__(self, s0):
        self.s = Fraction(s0)
        self.q = self.s * self.s
        q = self.q
        self.rules = {
            ("c", "a"): [(1 / q, ("a", "c"))],
            ("cs", "a"): [(1 / q, ("a", "cs"))],
            ("c", "as"): [(q, ("as", "c"))],
            ("cs", "as"): [(q, ("as", "cs"))],
            ("cs", "c"): [(Fraction(1), ("c", "cs"))],
            ("a", "as"): [(Fraction(1), ()), (-q * q, ("c", "cs"))],
            ("as", "a"): [(Fraction(1), ()), (Fraction(-1), ("c", "cs"))],
        }

    # -- words ---------------------------------------------------------------

    def _find(self, w: tuple):
        for i in range(len(w) - 1):
            if (w[i], w[i + 1]) in self.rules:
                return i
        return None

    def normalize(self, x: dict) -> dict:
        """Rewrite to PBW words; returns ``{(k, m, n): Fraction}``."""
        todo = [(w, c) for w, c in x.items() if c]
        out: dict = {}
        while todo:
            w, c = todo.pop()
            i = self._find(w)
            if i is None:
                key = self.key(w)
                out[key] = out.get(key, 0) + c
                continue
            for c2, rep in self.rules[(w[i], w[i + 1])]:
                todo.append((w[:i] + rep + w[i + 2:], c * c2))
        return {k: v for k, v in out.items() if v}

    @staticmethod
    def key(w: tuple) -> tuple:
        k = w.count("a") - w.count("as")
        return (k, w.count("c"), w.count("cs"))

    @staticmethod
    def word(key: tuple) -> tuple:
        k, m, n = key
        head = ("a",) * k if k >= 0 else ("as",) * (-k)
        return head + ("c",) * m + ("cs",) * n

    def from_normal(self, nf: dict) -> dict:
        return {self.word(k): v for k, v in nf.items()}

    def mul(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
        return out

    # -- actions ---------------------------------------------------------------

    def rho(self, h: str) -> list:
        s = self.s
        zero, one = Fraction(0), Fraction(1)
        return {
            "K": [[1 / s, zero], [zero, s]],
            "Kinv": [[s, zero], [zero, 1 / s]],
            "E": [[zero, zero], [one, zero]],
            "F": [[zero, one], [zero, zero]],
        }[h]

    def _u(self) -> dict:
        # u_ij as linear combinations of letters
        q = self.q
        return {
            (0, 0): {("a",): Fraction(1)},
            (0, 1): {("cs",): -q},
            (1, 0): {("c",): Fraction(1)},
            (1, 1): {("as",): Fraction(1)},
        }

    def _letter_index(self, letter: str) -> tuple:
        # letter = coeff * u_ij
        q = self.q
        return {"a": (1, (0, 0)), "c": (1, (1, 0)), "as": (1, (1, 1)), "cs": (-1 / q, (0, 1))}[letter]

    def act_letter(self, side: str, h: str, letter: str) -> dict:
        coeff, (i, j) = self._letter_index(letter)
        r = self.rho(h)
        u = self._u()
        out: dict = {}
        for k in range(2):
            if side == "left":
                w, src = r[k][j], u[(i, k)]
            else:
                w, src = r[i][k], u[(k, j)]
            if w:
                for word, c in src.items():
                    out[word] = out.get(word, 0) + coeff * w * c
        return out

    def _act_word(self, side: str, h: str, w: tuple) -> dict:
        if h in ("K", "Kinv"):
            acc = {(): Fraction(1)}
            for letter in w:
                acc = self.mul(acc, self.act_letter(side, h, letter))
            return acc
        if not w:
            return {}
        total: dict = {}
        for i in range(len(w)):
            acc = {(): Fraction(1)}
            for j, letter in enumerate(w):
                g = "Kinv" if j < i else (h if j == i else "K")
                acc = self.mul(acc, self.act_letter(side, g, letter))
            for word, c in acc.items():
                total[word] = total.get(word, 0) + c
        return total

    def act(self, side: str, h: str, x: dict) -> dict:
        out: dict = {}
        for w, c in x.items():
            for w2, c2 in self._act_word(side, h, w).items():
                out[w2] = out.get(w2, 0) + c * c2
        return out

    def X(self, a: str, x: dict, side: str = "left") -> dict:
        s, q = self.s, self.q
        if a == "+":
            if side == "left":
                return _scale(self.act(side, "E", self.act(side, "K", x)), s)
            return _scale(self.act(side, "K", self.act(side, "E", x)), s)
        if a == "-":
            if side == "left":
                return _scale(self.act(side, "F", self.act(side, "K", x)), 1 / s)
            return _scale(self.act(side, "K", self.act(side, "F", x)), 1 / s)
        k4 = x
        for _ in range(4):
            k4 = self.act(side, "K", k4)
        diff = dict(x)
        for w, c in k4.items():
            diff[w] = diff.get(w, 0) - c
        return _scale(diff, 1 / (1 - 1 / (q * q)))


def _scale(x: dict, c) -> dict:
    return {w: v * c for w, v in x.items()}


def evaluate(f, s0) -> dict:
    """``{(k, m, n): Fraction}`` image of an ``AlgebraElement`` at ``s = s0``."""
    out = {}
    for mono, coeff in f.terms().items():
        v = coeff.eval(s0)
        if v:
            out[tuple(mono)] = v
    return out
