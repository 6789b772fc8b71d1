"""
Workbench: the command layer behind the CLI and the claims harness.

Groups and their automorphism data are cached per canonical spec string so
that a sweep over many liens computes Aut(F) once per kernel.
"""

from __future__ import annotations

import re
import time
from typing import Dict, List, Optional, Tuple

from src.analysis.report import Report
from src.autsplit.automorphisms import AutData, automorphism_group
from src.autsplit.lifting import aut_split_section, verify_complement
from src.catalog.group_spec import make_named, parse_group_spec
from src.config.settings import config
from src.groups.cayley import CayleyTable
from src.groups.permgroup import PermGroup
from src.lien.extension import neutral_lift, pullback_extension, verify_section
from src.lien.lien import (
    Lien, complete_kappa, gamma_cayley_table, make_lien, require_centerless, resolve_outer_label,
)
from src.lien.tower import split_via_tower
from src.lietype.params import LieTypeParams, parse_family
from src.lietype.verdict import is_aut_split_lie
from src.structure.composition import composition_factors, is_anti_solvable
from src.utils.exceptions import LienError, LieParamsError
from src.utils.helpers import Deadline, KeyedLocks, format_generators
from src.utils.logger import logger

_KAPPA_PAIR_RE = re.compile(r"^\s*(\d+)\s*:\s*([A-Za-z0-9_]+)\s*$")


def parse_kappa_pairs(text: str) -> List[Tuple[int, str]]:
    """
    Parse "1:s,2:p" (commas or whitespace) into (1-indexed generator, label) pairs.

    Raises:
        LienError: on malformed pairs or repeated generators
    """
    pairs = []
    seen = set()
    for chunk in re.split(r"[,\s]+", text.strip()):
        if not chunk:
            continue
        match = _KAPPA_PAIR_RE.match(chunk)
        if not match:
            raise LienError(f"Malformed kappa pair '{chunk}', expected <generator>:<label>")
        index, label = int(match.group(1)), match.group(2)
        if index < 1:
            raise LienError(f"Gamma generator indices start at 1, got {index}")
        if index in seen:
            raise LienError(f"Gamma generator {index} assigned twice")
        seen.add(index)
        pairs.append((index, label))
    return pairs


class Workbench:
    """
    Cached groups, automorphism data and Gamma tables plus the four commands.
    """

    def __init__(self, search_timeout: Optional[float] = None):
        self.search_timeout = config.SEARCH_TIMEOUT_SECONDS if search_timeout is None else search_timeout
        self._groups: Dict[str, PermGroup] = {}
        self._auts: Dict[str, AutData] = {}
        self._gamma_tables: Dict[str, CayleyTable] = {}
        self._lock = KeyedLocks()

    def deadline(self, label: str) -> Deadline:
        return Deadline(self.search_timeout, label)

    # ------------------------------------------------------------------
    # Caches
    # ------------------------------------------------------------------

    def group(self, spec: str) -> PermGroup:
        key = str(parse_group_spec(spec))
        with self._lock(f"group:{key}"):
            if key not in self._groups:
                self._groups[key] = make_named(key)
            return self._groups[key]

    def aut(self, spec: str) -> AutData:
        key = str(parse_group_spec(spec))
        group = self.group(key)
        with self._lock(f"aut:{key}"):
            if key not in self._auts:
                self._auts[key] = automorphism_group(group, self.deadline(f"Aut({key})"))
            return self._auts[key]

    def gamma_table(self, spec: str) -> CayleyTable:
        key = str(parse_group_spec(spec))
        gamma = self.group(key)
        with self._lock(f"gamma:{key}"):
            if key not in self._gamma_tables:
                self._gamma_tables[key] = gamma_cayley_table(gamma)
            return self._gamma_tables[key]

    def lien(self, f_spec: str, gamma_spec: str, kappa_text: str) -> Lien:
        """Build a lien from generator:label pairs (unlisted generators map to 1)."""
        F = self.group(f_spec)
        require_centerless(F)
        aut = self.aut(f_spec)
        gamma = self.group(gamma_spec)
        table = self.gamma_table(gamma_spec)
        assignments = {
            index - 1: resolve_outer_label(aut, label) for index, label in parse_kappa_pairs(kappa_text)
        }
        kappa = complete_kappa(aut, table, assignments)
        return make_lien(F, gamma, kappa, aut=aut, gamma_table=table)

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def cmd_analyze(self, spec: str) -> Report:
        report = Report("analyze", {"spec": spec})
        start = time.perf_counter()
        group = self.group(spec)
        series = composition_factors(group)
        report.verdicts.update({
            "group": group.label(),
            "order": group.order,
            "center_order": group.center().order,
            "composition_factors": series.names(),
            "anti_solvable": is_anti_solvable(group),
        })
        report.timing["structure"] = time.perf_counter() - start

        start = time.perf_counter()
        aut = self.aut(spec)
        section = aut_split_section(aut, self.deadline(f"complement in Aut({group.label()})"))
        generators = section.generator_images()
        report.verdicts.update({
            "aut_order": aut.aut_group.order,
            "out_order": aut.out_order,
            "outer_classes": aut.summary()["outer_classes"],
            "aut_split": section.found,
        })
        if section.found:
            report.witnesses["complement"] = format_generators(generators)
            report.verdicts["witness_verified"] = verify_complement(aut, generators) if generators else True
        report.timing["automorphisms"] = time.perf_counter() - start
        return report

    def cmd_lie(self, family: str, rank: str, p: int, m: int) -> Report:
        report = Report("lie", {"family": family, "rank": rank, "p": p, "m": m})
        try:
            rank_value = None if str(rank) in ("-", "0", "") else int(rank)
        except ValueError as e:
            raise LieParamsError(f"rank must be an integer or '-', got '{rank}'") from e
        params = LieTypeParams(parse_family(family), rank_value, int(p), int(m))
        report.verdicts.update(is_aut_split_lie(params).to_dict())
        return report

    def cmd_lien(self, f_spec: str, gamma_spec: str, kappa_text: str) -> Report:
        report = Report("lien", {"f": f_spec, "gamma": gamma_spec, "kappa": kappa_text})
        start = time.perf_counter()
        lien = self.lien(f_spec, gamma_spec, kappa_text)
        report.verdicts["lien"] = lien.describe()
        report.verdicts["kappa_table"] = lien.kappa_labels()
        report.timing["setup"] = time.perf_counter() - start

        start = time.perf_counter()
        lift = neutral_lift(lien, self.deadline(f"lift {lien.describe()}"))
        report.verdicts["neutral"] = lift.found
        if lift.found:
            extension = pullback_extension(lien)
            section = extension.section_from_lift(lift)
            report.verdicts["extension_order"] = extension.E.order
            report.verdicts["section_verified"] = verify_section(extension, section)
            report.witnesses["section"] = format_generators(section.images)
        else:
            report.verdicts["certificate"] = (
                f"exhaustive lift search over generating tuple {list(lift.generators)} "
                f"completed after {lift.nodes} nodes without a lift"
            )
        report.timing["neutrality"] = time.perf_counter() - start

        start = time.perf_counter()
        tower = split_via_tower(lien, deadline=self.deadline(f"tower {lien.describe()}"))
        report.verdicts["tower"] = tower.to_dict()
        if tower.applicable:
            report.verdicts["tower_agrees"] = tower.split == lift.found
        report.timing["tower"] = time.perf_counter() - start
        logger.info(f"lien {lien.describe()}: neutral={lift.found}, tower={tower.split}")
        return report

    def cmd_reproduce(self, workers: Optional[int] = None) -> Report:
        """
        Run every claim; the report lists each claim's outcome.

        Raises:
            ClaimFailed: naming the first failing claim, after the report is saved
        """
        from src.evaluation.claim_cases import get_claim_cases
        from src.evaluation.claim_suite import ClaimSuite

        start = time.perf_counter()
        suite = ClaimSuite(self)
        suite.load_claim_cases(get_claim_cases())
        suite.run_all(workers=workers)
        report = suite.to_report()
        report.timing["total"] = time.perf_counter() - start
        suite.generate_report(report)
        suite.print_summary()
        suite.raise_on_failure(report)
        return report
