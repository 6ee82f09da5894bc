from typing import List, Optional, Sequence

from app.models.election import Election, PartyAxis
from app.models.schemas import QueryReport, SchemeRow
from app.utils.config import SCORE_TABLE_LIMIT
from app.utils.election import scheme_count, scheme_score_table

TEXT = "text"
STRUCTURED = "structured"
FORMATS = (TEXT, STRUCTURED)


def score_table_rows(election: Election, limit: Optional[int] = None) -> Optional[List[SchemeRow]]:
    """Per-scheme table, or None when there are more schemes than ``limit``."""
    limit = SCORE_TABLE_LIMIT if limit is None else limit
    if scheme_count(election) > limit:
        return None
    rows = []
    for evaluation in scheme_score_table(election, max_schemes=limit):
        rows.append(
            SchemeRow(
                nominees=list(evaluation.scheme.names(election)),
                scores=list(evaluation.scores.scores),
                winners=[election.party_names[party] for party in evaluation.scores.winning_parties()],
            )
        )
    return rows


def axis_names(election: Election, axis: Optional[PartyAxis]) -> Optional[List[str]]:
    return None if axis is None else list(axis.names(election))


def _text(report: QueryReport) -> List[str]:
    lines = [f"query: {report.query}"]
    if report.party is not None:
        lines.append(f"party: {report.party}")
    lines.append(f"answer: {report.answer}")
    if report.witness is not None:
        lines.append(f"witness: {' '.join(report.witness)}")
    if report.score is not None:
        lines.append(f"score: {report.score}")
    if report.axis is not None:
        lines.append(f"axis: {' < '.join(report.axis)}")
    if report.oracle is not None:
        lines.append(f"oracle: {report.oracle}")
    if report.score_table is not None:
        lines.append("schemes:")
        width = max((len(" ".join(row.nominees)) for row in report.score_table), default=0)
        for row in report.score_table:
            nominees = " ".join(row.nominees).ljust(width)
            scores = " ".join(str(score) for score in row.scores)
            lines.append(f"  {nominees} | {scores} | winners: {' '.join(row.winners)}")
    lines.extend(f"note: {note}" for note in report.notes)
    return lines


def _joined(values: Sequence) -> str:
    return ",".join(str(value) for value in values)


def _structured(report: QueryReport) -> List[str]:
    lines = [f"query={report.query}"]
    if report.party is not None:
        lines.append(f"party={report.party}")
    lines.append(f"answer={report.answer}")
    if report.witness is not None:
        lines.append(f"witness={_joined(report.witness)}")
    if report.score is not None:
        lines.append(f"score={report.score}")
    if report.axis is not None:
        lines.append(f"axis={_joined(report.axis)}")
    if report.oracle is not None:
        lines.append(f"oracle={report.oracle}")
    if report.score_table is not None:
        lines.append(f"table.count={len(report.score_table)}")
        for index, row in enumerate(report.score_table):
            lines.append(f"table.{index}.nominees={_joined(row.nominees)}")
            lines.append(f"table.{index}.scores={_joined(row.scores)}")
            lines.append(f"table.{index}.winners={_joined(row.winners)}")
    lines.extend(f"note.{index}={note}" for index, note in enumerate(report.notes))
    return lines


def serialize_report(report: QueryReport, output_format: str = TEXT) -> str:
    if output_format not in FORMATS:
        raise ValueError(f"unknown report format '{output_format}'")
    lines = _text(report) if output_format == TEXT else _structured(report)
    return "\n".join(lines) + "\n"
