"""Catalogue of literary devices: codes, names, domains and allowed marks.

The catalogue is fixed data. Every device accepts marks {0, 1, 2} except
CG-1, the single deduction device, which accepts {0, -1}.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache

from .catalogue_data import CATALOGUE_VERSION, DEVICE_ROWS

DOMAINS = ("A", "B", "C")
C_PARTS = ("A", "B", "C", "D", "E", "F", "G")

# Highest device index per domain (and per part for domain C).
INDEX_RANGES = {
    "A": 14,
    "B": 6,
    "CA": 14,
    "CB": 5,
    "CC": 7,
    "CD": 7,
    "CE": 22,
    "CF": 8,
    "CG": 1,
}

DOMAIN_TITLES = {
    "A": "Word Order and Sentence Structure",
    "B": "Figures of Speech",
    "C": "Embellishments",
}

PART_TITLES = {
    "A": "Word Choice",
    "B": "Addressing Groups",
    "C": "Sentence Construction",
    "D": "Musicality",
    "E": "Strengthening the Argument",
    "F": "Paragraph Construction",
    "G": "Miscellaneous",
}

_CODE_RE = re.compile(r"^(A|B|C[A-G])-([1-9][0-9]?)$")


class TaxonomyError(Exception):
    """Base class for catalogue errors."""


class UnknownDevice(TaxonomyError):
    """Raised when a device code is not in the catalogue."""

    def __init__(self, code_text: str):
        self.code_text = code_text
        super().__init__(f"unknown device code: {code_text!r}")


class InvalidFilter(TaxonomyError):
    """Raised when a part filter is given without domain C."""


@dataclass(frozen=True, order=True)
class DeviceCode:
    """A catalogue position such as A-3, B-6 or CE-15."""

    domain: str
    part: str | None
    index: int

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise ValueError(f"bad domain {self.domain!r}")
        if (self.domain == "C") != (self.part is not None):
            raise ValueError("part is required for domain C and only there")
        if self.part is not None and self.part not in C_PARTS:
            raise ValueError(f"bad part {self.part!r}")
        key = self.domain + (self.part or "")
        if not 1 <= self.index <= INDEX_RANGES[key]:
            raise ValueError(f"index {self.index} out of range for {key}")

    @classmethod
    def parse(cls, text: str) -> "DeviceCode":
        m = _CODE_RE.match(text)
        if not m:
            raise UnknownDevice(text)
        prefix, index = m.group(1), int(m.group(2))
        try:
            return cls(prefix[0], prefix[1] if len(prefix) == 2 else None, index)
        except ValueError:
            raise UnknownDevice(text) from None

    def render(self) -> str:
        return f"{self.domain}{self.part or ''}-{self.index}"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Device:
    code: DeviceCode
    name_en: str
    name_ar: str
    allowed_marks: frozenset[int]
    definition_summary: str
    deep_link_slug: str
    multiplicity_note: str | None = None

    @property
    def domain(self) -> str:
        return self.code.domain

    @property
    def part(self) -> str | None:
        return self.code.part

    def to_json_dict(self) -> dict:
        return {
            "code": self.code.render(),
            "name_en": self.name_en,
            "name_ar": self.name_ar,
            "domain": self.domain,
            "part": self.part,
            "allowed_marks": sorted(self.allowed_marks),
            "multiplicity_note": self.multiplicity_note,
            "definition_summary": self.definition_summary,
            "deep_link_slug": self.deep_link_slug,
        }


class Taxonomy:
    """The full device catalogue, in scoring-proforma order."""

    def __init__(self, devices: tuple[Device, ...], version: str):
        self.devices = devices
        self.version = version
        self._by_code = {d.code: d for d in devices}
        self._check()

    def _check(self):
        if len(self.devices) != 84:
            raise TaxonomyError(f"expected 84 devices, got {len(self.devices)}")
        if len(self._by_code) != len(self.devices):
            raise TaxonomyError("duplicate device codes in catalogue")
        counts = {"A": 0, "B": 0, "C": 0}
        part_counts = dict.fromkeys(C_PARTS, 0)
        for d in self.devices:
            counts[d.domain] += 1
            if d.part:
                part_counts[d.part] += 1
        if (counts["A"], counts["B"], counts["C"]) != (14, 6, 64):
            raise TaxonomyError(f"bad domain cardinalities: {counts}")
        expected_parts = dict(zip(C_PARTS, (14, 5, 7, 7, 22, 8, 1)))
        if part_counts != expected_parts:
            raise TaxonomyError(f"bad part cardinalities: {part_counts}")
        slugs = {d.deep_link_slug for d in self.devices}
        if len(slugs) != len(self.devices):
            raise TaxonomyError("deep link slugs are not unique")
        deduction = [d for d in self.devices if d.allowed_marks != frozenset({0, 1, 2})]
        if len(deduction) != 1 or deduction[0].code.render() != "CG-1":
            raise TaxonomyError("CG-1 must be the only non-{0,1,2} device")

    def get(self, code: DeviceCode | str) -> Device:
        if isinstance(code, str):
            code = DeviceCode.parse(code)
        try:
            return self._by_code[code]
        except KeyError:
            raise UnknownDevice(code.render()) from None

    def list(self, domain: str | None = None, part: str | None = None) -> list[Device]:
        if part is not None and domain != "C":
            raise InvalidFilter("part filters require domain C")
        out = []
        for d in self.devices:
            if domain is not None and d.domain != domain:
                continue
            if part is not None and d.part != part:
                continue
            out.append(d)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Taxonomy)
            and self.version == other.version
            and self.devices == other.devices
        )

    def __iter__(self):
        return iter(self.devices)

    def __len__(self):
        return len(self.devices)


def _build() -> Taxonomy:
    devices = []
    for code_text, name_en, name_ar, slug, definition, note in DEVICE_ROWS:
        code = DeviceCode.parse(code_text)
        marks = frozenset({0, -1}) if code_text == "CG-1" else frozenset({0, 1, 2})
        devices.append(
            Device(
                code=code,
                name_en=name_en,
                name_ar=name_ar,
                allowed_marks=marks,
                definition_summary=definition,
                deep_link_slug=slug,
                multiplicity_note=note,
            )
        )
    return Taxonomy(tuple(devices), CATALOGUE_VERSION)


@lru_cache(maxsize=1)
def load_taxonomy() -> Taxonomy:
    """Return the embedded catalogue; identical on every call."""
    return _build()


def get_device(code: DeviceCode | str) -> Device:
    return load_taxonomy().get(code)


def list_devices(domain: str | None = None, part: str | None = None) -> list[Device]:
    return load_taxonomy().list(domain, part)


def export_taxonomy_json() -> str:
    """The catalogue as a JSON array, the contract consumed by the UI."""
    records = [d.to_json_dict() for d in load_taxonomy()]
    return json.dumps(records, ensure_ascii=False, indent=2) + "\n"
