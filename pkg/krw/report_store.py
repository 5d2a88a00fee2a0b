"""In-memory accumulation of check records

Check groups append records as they run; the store assembles the sorted
report and the per-status summary once every group is done.
"""

import logging
from typing import Any, Dict, Iterable, List

from krw.models import CheckRecord, CheckStatus, ReportSummary, VerificationReport

logger = logging.getLogger(__name__)


class CheckStore:
    """Collects CheckRecords keyed by check name"""

    def __init__(self):
        self.records: Dict[str, CheckRecord] = {}

    def add(self, record: CheckRecord) -> None:
        """Store a record

        Raises:
            ValueError: a record with the same name is already stored
        """
        if record.name in self.records:
            raise ValueError(f"duplicate check name {record.name}")
        self.records[record.name] = record

    def extend(self, records: Iterable[CheckRecord]) -> None:
        for record in records:
            self.add(record)

    def skip(self, names: Iterable[str], reason: str) -> None:
        for name in names:
            self.add(CheckRecord(name=name, status=CheckStatus.SKIPPED, details=reason))

    def get_records(self) -> List[CheckRecord]:
        """All records in name order"""
        return [self.records[k] for k in sorted(self.records)]

    def get_summary(self) -> ReportSummary:
        counts = {status: 0 for status in CheckStatus}
        for record in self.records.values():
            counts[record.status] += 1
        return ReportSummary(passed=counts[CheckStatus.PASS], fail=counts[CheckStatus.FAIL],
                             skipped=counts[CheckStatus.SKIPPED])

    def build_report(self, config: Dict[str, Any]) -> VerificationReport:
        summary = self.get_summary()
        logger.info(f"Report: {summary.passed} pass, {summary.fail} fail, {summary.skipped} skipped")
        return VerificationReport(config=config, checks=self.get_records(), summary=summary)
