"""
Number-field records from the LMFDB (live API or committed fixture) and the
bulk filter through the p-extension certifier.

Fixture format: newline-delimited JSON.  Line 1 is a header object (snapshot
date, the query, provenance); each following line is one record exactly as
the ``/api/nf_fields/`` endpoint returns it (``label``, ``coeffs`` ascending,
``degree``, ``disc_abs``, ``disc_sign``, ``galois_label``, ...).
"""

import json
import logging
import os
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass, field
from importlib import resources

from .errors import TransportError
from .verdict import certify_general_field

log = logging.getLogger(__name__)

DEFAULT_BASE_URL = "https://www.lmfdb.org"
API_PATH = "/api/nf_fields/"
FIXTURE_NAME = "c5_fields_p5.ndjson"

__all__ = [
    "FieldRecord",
    "FilterResult",
    "default_fixture",
    "read_fixture",
    "write_fixture",
    "fetch_candidates",
    "filter_by_theorem",
]


@dataclass(frozen=True)
class FieldRecord:
    label: str
    defining_poly: tuple
    degree: int
    disc: int
    galois_label: str
    extra: tuple = ()

    @classmethod
    def from_json(cls, obj):
        try:
            coeffs = tuple(int(c) for c in obj["coeffs"])
            degree = int(obj["degree"])
            disc = int(obj["disc_sign"]) * int(obj["disc_abs"])
            rec = cls(
                label=str(obj["label"]),
                defining_poly=coeffs,
                degree=degree,
                disc=disc,
                galois_label=str(obj.get("galois_label", "")),
                extra=tuple(
                    (k, json.dumps(v, sort_keys=True))
                    for k, v in sorted(obj.items())
                    if k not in ("label", "coeffs", "degree", "disc_abs", "disc_sign", "galois_label")
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError("malformed record %r: %s" % (obj.get("label") if isinstance(obj, dict) else obj, exc))
        if len(coeffs) - 1 != degree:
            raise ValueError("record %s: degree %d but %d coefficients" % (rec.label, degree, len(coeffs)))
        return rec

    def to_json(self):
        out = {
            "label": self.label,
            "coeffs": list(self.defining_poly),
            "degree": self.degree,
            "disc_abs": abs(self.disc),
            "disc_sign": 1 if self.disc >= 0 else -1,
            "galois_label": self.galois_label,
        }
        for k, v in self.extra:
            out[k] = json.loads(v)
        return out

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def default_fixture():
    return resources.files("zpfermat").joinpath("data").joinpath(FIXTURE_NAME)


def read_fixture(path=None):
    """Return ``(header, records, errors)``; malformed lines go to ``errors``."""
    path = default_fixture() if path is None else path
    opener = path.open if hasattr(path, "open") else lambda *a, **k: open(path, *a, **k)
    with opener("r", encoding="utf-8") as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty fixture")
    header = json.loads(lines[0])
    records, errors = [], []
    for i, ln in enumerate(lines[1:], start=2):
        try:
            records.append(FieldRecord.from_json(json.loads(ln)))
        except ValueError as exc:
            errors.append("line %d: %s" % (i, exc))
    return header, records, errors


def write_fixture(path, header, records):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header, sort_keys=True) + "\n")
        for r in records:
            fh.write(r.dumps() + "\n")


# -- live API --------------------------------------------------------------------


def _get_json(url, timeout, retries, backoff):
    delay = backoff
    for attempt in range(retries + 1):
        try:
            req = urllib.request.Request(url, headers={"Accept": "application/json"})
            with urllib.request.urlopen(req, timeout=timeout) as resp:
                return json.loads(resp.read().decode("utf-8"))
        except (urllib.error.URLError, OSError, ValueError) as exc:
            if attempt == retries:
                raise TransportError("GET %s failed after %d attempts: %s" % (url, retries + 1, exc))
            log.warning("GET %s failed (%s); retrying in %.2fs", url, exc, delay)
            time.sleep(delay)
            delay = min(delay * 2, 30.0)


def _query_url(base_url, degree, constraints):
    params = {"degree": degree, "_format": "json"}
    params.update(constraints or {})
    return base_url.rstrip("/") + API_PATH + "?" + urllib.parse.urlencode(params)


def fetch_candidates(
    degree=5,
    constraints=None,
    fixture=None,
    live=False,
    base_url=None,
    cursor_path=None,
    timeout=30.0,
    retries=4,
    backoff=0.5,
):
    """Field records of the given degree.

    With ``live=False`` (the default) the records come from ``fixture`` (the
    packaged snapshot when None).  With ``live=True`` pages are followed
    through the API's ``next`` links; progress is written to ``cursor_path``
    after every page so an interrupted crawl resumes where it stopped.
    Returns ``(records, errors)``.
    """
    if not live:
        _, records, errors = read_fixture(fixture)
        return [r for r in records if r.degree == degree], errors

    base_url = base_url or os.environ.get("LMFDB_BASE_URL", DEFAULT_BASE_URL)
    if constraints is None:
        constraints = {"galois_label": "5T1", "r2": 0}
    state = {"next": _query_url(base_url, degree, constraints), "raw": []}
    if cursor_path and os.path.exists(cursor_path):
        with open(cursor_path, "r", encoding="utf-8") as fh:
            state = json.load(fh)
    while state["next"]:
        page = _get_json(state["next"], timeout, retries, backoff)
        state["raw"].extend(page.get("data", []))
        nxt = page.get("next")
        state["next"] = urllib.parse.urljoin(base_url.rstrip("/") + "/", nxt) if nxt else None
        if cursor_path:
            tmp = cursor_path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(state, fh)
            os.replace(tmp, cursor_path)
    records, errors = [], []
    for obj in state["raw"]:
        try:
            records.append(FieldRecord.from_json(obj))
        except ValueError as exc:
            errors.append(str(exc))
    return records, errors


# -- filtering --------------------------------------------------------------------


@dataclass
class FilterResult:
    passed: list = field(default_factory=list)
    failed: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    reports: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)


def filter_by_theorem(records, p=5, sample_bound=100):
    """Partition records by the certifier's overall verdict for p."""
    out = FilterResult()
    for rec in records:
        try:
            rep = certify_general_field(list(rec.defining_poly), p, sample_bound)
        except (ValueError, ArithmeticError) as exc:
            out.errors[rec.label] = str(exc)
            out.failed.append(rec)
            continue
        out.reports[rec.label] = rep
        if rep.overall == "certified-evidence":
            out.passed.append(rec)
        elif rep.overall == "failed":
            out.failed.append(rec)
        else:
            out.inconclusive.append(rec)
    return out
