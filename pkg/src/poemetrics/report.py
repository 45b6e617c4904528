"""Report assembly: JSON/CSV documents and plot-ready distributions.

Quartiles use the inclusive median-of-halves method: the data is sorted and
split at the median, the median itself joining both halves when the count
is odd; Q1 and Q3 are the medians of the halves.  Histograms over integer
counts use one bin per integer; rhyme richness uses ten fixed-width bins
over [0, 1].
"""

from __future__ import annotations

from typing import Sequence

from .framework import AnalysisResult, AnalyzerRegistry, ASPECTS
from .novelty import NoveltyReport

HISTOGRAM_ANALYZERS = {
    "stanza_count": "stanza-count",
    "lines_per_stanza": "lines-per-stanza",
    "syllables_per_line": "syllables-per-line",
    "rhyme_pattern_count": "rhyme-pattern-count",
    "rhyme_richness": "rhyme-richness",
}


def _median(sorted_values: Sequence[float]) -> float:
    n = len(sorted_values)
    mid = n // 2
    if n % 2:
        return float(sorted_values[mid])
    return (sorted_values[mid - 1] + sorted_values[mid]) / 2.0


def five_number_summary(scores: Sequence[float]) -> dict:
    """min/Q1/median/Q3/max with inclusive median-of-halves quartiles."""
    if not scores:
        return {"no_data": True}
    data = sorted(float(s) for s in scores)
    n = len(data)
    half = n // 2
    lower = data[:half + 1] if n % 2 else data[:half]
    upper = data[half:]
    return {
        "count": n,
        "min": data[0],
        "q1": _median(lower),
        "median": _median(data),
        "q3": _median(upper),
        "max": data[-1],
    }


def integer_histogram(values: Sequence[int]) -> dict:
    """One bin per integer between the observed min and max."""
    if not values:
        return {"no_data": True}
    lo, hi = min(values), max(values)
    counts = [0] * (hi - lo + 1)
    for v in values:
        counts[v - lo] += 1
    return {
        "bin_edges": [v - 0.5 for v in range(lo, hi + 2)],
        "counts": counts,
        "values": {str(v): c for v, c in zip(range(lo, hi + 1), counts) if c},
        "total": len(values),
    }


def ratio_histogram(values: Sequence[float], bins: int = 10) -> dict:
    """Fixed-width bins over [0, 1]; the last bin includes 1.0."""
    if not values:
        return {"no_data": True}
    counts = [0] * bins
    for v in values:
        counts[min(int(v * bins), bins - 1)] += 1
    return {
        "bin_edges": [i / bins for i in range(bins + 1)],
        "counts": counts,
        "total": len(values),
    }


def aspect_grouped(results: Sequence[AnalysisResult],
                   registry: AnalyzerRegistry) -> dict:
    """Group analyzer results under the four aspect keys (all always present)."""
    grouped: dict[str, list[dict]] = {aspect: [] for aspect in ASPECTS}
    for result in results:
        entry: dict = {"analyzer": result.analyzer_id, "name": result.name}
        if result.ok:
            entry["value"] = result.value
        else:
            entry["error"] = result.error
        grouped[registry.get(result.analyzer_id).aspect].append(entry)
    return grouped


def novelty_section(report: NoveltyReport) -> dict:
    section = {
        "scope": report.scope,
        "n": report.n,
        "mean": report.mean,
        "per_unit": [[unit, score] for unit, score in report.per_unit],
        "sampled": report.sampled,
        "seed": report.seed,
    }
    if report.mode is not None:
        section["mode"] = report.mode
    return section


def _poem_values(report: dict, analyzer_id: str) -> list:
    values = []
    for poem_entry in report.get("poems", []):
        for aspect_results in poem_entry.get("aspects", {}).values():
            for entry in aspect_results:
                if entry.get("analyzer") == analyzer_id and "value" in entry:
                    value = entry["value"]
                    if isinstance(value, list):
                        values.extend(value)
                    else:
                        values.append(value)
    return values


def _novelty_scores(report: dict, scope: str) -> list[float]:
    section = report.get("novelty", {}).get(scope)
    if not section or "per_unit" not in section:
        return []
    return [score for _, score in section["per_unit"]]


def emit_plot_data(report: dict) -> dict:
    """Plot-ready distributions extracted from a collection report.

    Produces explicit bin edges and counts per histogram, and five-number
    summaries for the intra/inter novelty score sets.
    """
    histograms = {}
    for key, analyzer_id in HISTOGRAM_ANALYZERS.items():
        values = _poem_values(report, analyzer_id)
        if key == "rhyme_richness":
            histograms[key] = ratio_histogram(values)
        else:
            histograms[key] = integer_histogram([int(v) for v in values])
    return {
        "histograms": histograms,
        "score_summaries": {
            "intra_rouge": five_number_summary(_novelty_scores(report, "intra")),
            "inter_rouge": five_number_summary(_novelty_scores(report, "inter")),
        },
    }


def flatten_for_csv(report: dict) -> list[tuple[str, str, str, str, object]]:
    """Flatten a report to (section, unit, analyzer, metric, value) rows.

    Every scalar present in the JSON analyzer results appears in exactly one
    row; list values get one row per element, labeled ``name[i]``.
    """
    rows: list[tuple[str, str, str, str, object]] = []

    def result_rows(section: str, unit: str, entries: Sequence[dict]) -> None:
        for entry in entries:
            analyzer = entry["analyzer"]
            if "error" in entry:
                rows.append((section, unit, analyzer, "error", entry["error"]))
                continue
            value = entry["value"]
            if isinstance(value, list):
                for i, item in enumerate(value):
                    rows.append((section, unit, analyzer, f"{entry['name']}[{i}]", item))
            elif isinstance(value, dict):
                for key in sorted(value):
                    rows.append((section, unit, analyzer, f"{entry['name']}:{key}",
                                 value[key]))
            else:
                rows.append((section, unit, analyzer, entry["name"], value))

    for poem_entry in report.get("poems", []):
        for aspect_results in poem_entry.get("aspects", {}).values():
            result_rows("poem", poem_entry["id"], aspect_results)
    collection = report.get("collection")
    if collection:
        for aspect_results in collection.get("aspects", {}).values():
            result_rows("collection", "", aspect_results)
    for scope, section in report.get("novelty", {}).items():
        if "per_unit" in section:
            for unit, score in section["per_unit"]:
                rows.append((f"novelty-{scope}", unit, "", "mean-f1", score))
            rows.append((f"novelty-{scope}", "", "", "mean", section["mean"]))
    for verdict in report.get("evaluation", {}).get("results", []):
        rows.append(("evaluation", "", verdict["analyzer"], "verdict",
                     verdict["verdict"]))
    return rows
