"""Analyzer registry and the analyze/evaluate contract.

An analyzer is a callable taking a poem or a collection and returning a
``(name, value)`` pair, registered under a descriptor that fixes its aspect
(poetic, novelty, fluency or lexsem), its scope (single-poem or collection)
and its language.  ``analyze`` runs a selection of analyzers and never lets
one analyzer's failure abort the batch; ``evaluate`` compares results to
exact or range expectations and yields pass/fail verdicts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from numbers import Number
from pathlib import Path
from typing import Callable, Iterable, Sequence, Union

from .corpus import Poem, PoemCollection

ASPECTS = ("poetic", "novelty", "fluency", "lexsem")
SCOPES = ("single-poem", "collection")
LANGUAGE_INDEPENDENT = "independent"

#: Numeric expectations pass when within this of the target.
NUMERIC_TOLERANCE = 1e-9

Subject = Union[Poem, PoemCollection]
AnalyzerFn = Callable[[Subject], tuple[str, object]]


class DuplicateIdError(ValueError):
    """Raised when an analyzer id is registered twice."""


@dataclass(frozen=True)
class AnalyzerDescriptor:
    id: str
    display_name: str
    aspect: str
    scope: str
    language: str = LANGUAGE_INDEPENDENT

    def __post_init__(self) -> None:
        if self.aspect not in ASPECTS:
            raise ValueError(f"aspect must be one of {ASPECTS}, got {self.aspect!r}")
        if self.scope not in SCOPES:
            raise ValueError(f"scope must be one of {SCOPES}, got {self.scope!r}")


@dataclass(frozen=True)
class AnalysisResult:
    """Named output of one analyzer, or the error that stopped it."""

    analyzer_id: str
    name: str
    value: object = None
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True)
class Expectation:
    """An exact or inclusive-range target for one analyzer's result."""

    analyzer_id: str
    exact: object | None = None
    lo: float | None = None
    hi: float | None = None

    def __post_init__(self) -> None:
        has_exact = self.exact is not None
        has_range = self.lo is not None or self.hi is not None
        if has_exact == has_range:
            raise ValueError("expectation needs exactly one of an exact value or a range")
        if has_range:
            if self.lo is None or self.hi is None:
                raise ValueError("range expectation needs both min and max")
            if self.lo > self.hi:
                raise ValueError(f"range is inverted: [{self.lo}, {self.hi}]")

    @property
    def is_range(self) -> bool:
        return self.lo is not None

    def describe(self) -> str:
        if self.is_range:
            return f"[{self.lo}, {self.hi}]"
        return repr(self.exact)


@dataclass(frozen=True)
class EvaluationResult:
    analyzer_id: str
    observed: object
    expected: str
    verdict: str          # "pass" | "fail"
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


class AnalyzerRegistry:
    """Ordered analyzer registry; ids are unique, registration order kept."""

    def __init__(self) -> None:
        self._analyzers: dict[str, tuple[AnalyzerDescriptor, AnalyzerFn]] = {}

    def register(self, descriptor: AnalyzerDescriptor, fn: AnalyzerFn) -> None:
        if descriptor.id in self._analyzers:
            raise DuplicateIdError(f"analyzer id {descriptor.id!r} already registered")
        self._analyzers[descriptor.id] = (descriptor, fn)

    def descriptors(self, aspect: str | None = None, scope: str | None = None,
                    language: str | None = None) -> list[AnalyzerDescriptor]:
        out = []
        for descriptor, _ in self._analyzers.values():
            if aspect is not None and descriptor.aspect != aspect:
                continue
            if scope is not None and descriptor.scope != scope:
                continue
            if language is not None and descriptor.language != language:
                continue
            out.append(descriptor)
        return out

    def get(self, analyzer_id: str) -> AnalyzerDescriptor:
        return self._analyzers[analyzer_id][0]

    def __contains__(self, analyzer_id: str) -> bool:
        return analyzer_id in self._analyzers

    def __len__(self) -> int:
        return len(self._analyzers)

    def analyze(self, subject: Subject,
                selection: Iterable[str] | None = None) -> list[AnalysisResult]:
        """Run each selected analyzer on the subject, in registration order.

        With no selection, every analyzer whose scope matches the subject
        kind runs.  Scope or language mismatches and analyzer exceptions
        yield error-marked results; other analyzers are unaffected.
        """
        subject_scope = "single-poem" if isinstance(subject, Poem) else "collection"
        if selection is None:
            ids = [d.id for d, _ in self._analyzers.values() if d.scope == subject_scope]
        else:
            ids = [i for i in self._analyzers if i in set(selection)]

        results: list[AnalysisResult] = []
        for analyzer_id in ids:
            descriptor, fn = self._analyzers[analyzer_id]
            if descriptor.scope != subject_scope:
                results.append(AnalysisResult(
                    analyzer_id, descriptor.display_name,
                    error=f"ScopeMismatch: {descriptor.scope} analyzer on {subject_scope}"))
                continue
            if (descriptor.language != LANGUAGE_INDEPENDENT
                    and not _language_matches(subject, descriptor.language)):
                results.append(AnalysisResult(
                    analyzer_id, descriptor.display_name,
                    error=f"LanguageMismatch: analyzer is {descriptor.language}-only"))
                continue
            try:
                name, value = fn(subject)
            except Exception as exc:
                results.append(AnalysisResult(
                    analyzer_id, descriptor.display_name,
                    error=f"{type(exc).__name__}: {exc}"))
                continue
            results.append(AnalysisResult(analyzer_id, name, value=value))
        return results


def _language_matches(subject: Subject, language: str) -> bool:
    if isinstance(subject, Poem):
        return subject.language == language
    return all(p.language == language for p in subject.poems)


def _is_number(value: object) -> bool:
    return isinstance(value, Number) and not isinstance(value, bool)


def _matches_exact(observed: object, expected: object) -> bool:
    if _is_number(observed) and _is_number(expected):
        return abs(float(observed) - float(expected)) <= NUMERIC_TOLERANCE
    return observed == expected


def evaluate(results: Sequence[AnalysisResult],
             expectations: Sequence[Expectation]) -> list[EvaluationResult]:
    """Compare analysis results against expectations, one verdict each.

    Exact targets pass on equality (numbers within NUMERIC_TOLERANCE);
    range targets pass when the observed number lies in [lo, hi], and a
    number-list observed passes only if every element does.  Expectations
    without a matching result fail with a MissingResult note.
    """
    by_id = {r.analyzer_id: r for r in reversed(results)}
    verdicts: list[EvaluationResult] = []
    for exp in expectations:
        result = by_id.get(exp.analyzer_id)
        if result is None:
            verdicts.append(EvaluationResult(exp.analyzer_id, None, exp.describe(),
                                             "fail", note="MissingResult"))
            continue
        if not result.ok:
            verdicts.append(EvaluationResult(exp.analyzer_id, None, exp.describe(),
                                             "fail", note=f"analyzer error: {result.error}"))
            continue
        observed = result.value
        if exp.is_range:
            if _is_number(observed):
                ok = exp.lo <= float(observed) <= exp.hi
            elif isinstance(observed, (list, tuple)) and observed and \
                    all(_is_number(v) for v in observed):
                ok = all(exp.lo <= float(v) <= exp.hi for v in observed)
            else:
                verdicts.append(EvaluationResult(exp.analyzer_id, observed, exp.describe(),
                                                 "fail", note="TypeMismatch: range needs numbers"))
                continue
        else:
            if _is_number(exp.exact) and not (_is_number(observed)):
                verdicts.append(EvaluationResult(exp.analyzer_id, observed, exp.describe(),
                                                 "fail", note="TypeMismatch: expected a number"))
                continue
            ok = _matches_exact(observed, exp.exact)
        verdicts.append(EvaluationResult(exp.analyzer_id, observed, exp.describe(),
                                         "pass" if ok else "fail"))
    return verdicts


def load_expectations(path: str | Path) -> list[Expectation]:
    """Read an expectation file: a JSON array of
    ``{"analyzer": id, "expect": value}`` or ``{"analyzer": id, "min": lo, "max": hi}``.
    """
    with open(path, encoding="utf-8") as handle:
        raw = json.load(handle)
    if not isinstance(raw, list):
        raise ValueError("expectation file must contain a JSON array")
    expectations = []
    for item in raw:
        if not isinstance(item, dict) or "analyzer" not in item:
            raise ValueError(f"bad expectation entry: {item!r}")
        if "expect" in item:
            expectations.append(Expectation(item["analyzer"], exact=item["expect"]))
        elif "min" in item and "max" in item:
            expectations.append(Expectation(item["analyzer"], lo=item["min"], hi=item["max"]))
        else:
            raise ValueError(f"expectation needs 'expect' or 'min'/'max': {item!r}")
    return expectations
