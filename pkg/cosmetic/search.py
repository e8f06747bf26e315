"""Enumeration and classification of cosmetic filling candidates.

Given two meridian slopes, the outer attaching slope must be equidistant
from both, which leaves two candidates. Each candidate yields a pair of lens
spaces that is classified as truly cosmetic, reflectively cosmetic, both or
neither. Whether a pair is mundane or exotic is not decided here.
"""
import json
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum

# cosmetic imports
from cosmetic.braids import type_iv_family
from cosmetic.conf import settings
from cosmetic.exceptions import CosmeticError
from cosmetic.filling import lens_from_construction
from cosmetic.lens import is_oriented_homeo, mod_inverse, reverse
from cosmetic.signals import candidate_found, scan_finished, scan_started
from cosmetic.slopes import MERIDIAN, Slope, distance, equidistant_slopes
from cosmetic.utils import is_coprime, units

logger = logging.getLogger(__name__)

OUTER_LABELS = ('difference', 'sum')


class Classification(str, Enum):
    TRULY = 'truly'
    REFLECTIVELY = 'reflectively'
    BOTH = 'both'
    NEITHER = 'neither'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CandidateReport:
    """One evaluated candidate: two meridians, an outer slope equidistant
    from both, the two filled lens spaces and their classification.
    """
    meridians: tuple
    outer: Slope
    fills: tuple
    dist: int
    classification: Classification
    provenance: str = ''
    family_is_non_example: bool = False

    def sort_key(self):
        return self.dist, self.meridians, self.outer


def classify_pair(first, second):
    """Classifies two lens spaces: ``truly`` if they are orientation
    preservingly homeomorphic, ``reflectively`` if orientation reversingly,
    ``both`` or ``neither`` accordingly.
    """
    truly = is_oriented_homeo(first, second)
    reflectively = is_oriented_homeo(first, reverse(second))
    if truly and reflectively:
        return Classification.BOTH
    if truly:
        return Classification.TRULY
    if reflectively:
        return Classification.REFLECTIVELY
    return Classification.NEITHER


def _evaluate(m1, m2, outer, provenance, family_is_non_example=False):
    fills = (lens_from_construction(m1, outer), lens_from_construction(m2, outer))
    return CandidateReport(
        meridians=(m1, m2),
        outer=outer,
        fills=fills,
        dist=distance(m1, outer),
        classification=classify_pair(*fills),
        provenance=provenance,
        family_is_non_example=family_is_non_example,
    )


def evaluate_construction(m1, m2):
    """Returns the two reports of the meridian pair, one for each
    equidistant outer slope, the difference slope first.

    **Parameters:**

    m1, m2
        Distinct meridian slopes.
    """
    outers = equidistant_slopes(m1, m2)
    return [_evaluate(m1, m2, outer, 'construction outer=%s' % label)
            for label, outer in zip(OUTER_LABELS, outers)]


def check_report(report):
    """Re-derives every invariant of a report and returns the list of
    problems found; an empty list means the report is consistent.
    """
    problems = []
    m1, m2 = report.meridians
    if m1 == m2:
        problems.append('meridians are equal')
    for meridian in (m1, m2):
        if distance(meridian, report.outer) != report.dist:
            problems.append('distance(%s, %s) != %d' % (meridian, report.outer, report.dist))
    expected = (lens_from_construction(m1, report.outer), lens_from_construction(m2, report.outer))
    if report.fills != expected:
        problems.append('fills %s %s, expected %s %s' % (report.fills + expected))
    for lens in report.fills:
        if lens.p != report.dist:
            problems.append('%s does not have p = %d' % (lens, report.dist))
    if report.classification != classify_pair(*report.fills):
        problems.append('classification %s is inconsistent' % report.classification)
    return problems


def report_to_json(report):
    """Returns the report as one line of JSON, with slopes as ``a/b`` and
    lens spaces as ``L(p,q)``.
    """
    return json.dumps({
        'meridian1': str(report.meridians[0]),
        'meridian2': str(report.meridians[1]),
        'outer': str(report.outer),
        'fill1': str(report.fills[0]),
        'fill2': str(report.fills[1]),
        'dist': report.dist,
        'classification': report.classification.value,
        'provenance': report.provenance,
        'family_is_non_example': report.family_is_non_example,
    })


def report_to_text(report):
    return 'dist=%d %s %s outer=%s %s %s %s [%s]' % (
        report.dist, report.meridians[0], report.meridians[1], report.outer,
        report.fills[0], report.fills[1], report.classification, report.provenance)


def bounded_slopes(max_denominator, max_numerator=None):
    """Returns the canonical slopes ``a/b`` with ``0 <= b <= max_denominator``
    and ``|a| <= max_numerator`` (default ``max_denominator``), sorted.
    """
    if max_numerator is None:
        max_numerator = max_denominator
    slopes = [MERIDIAN]
    for b in range(1, max_denominator + 1):
        for a in range(-max_numerator, max_numerator + 1):
            if is_coprime(a, b):
                slopes.append(Slope(a, b))
    return sorted(slopes)


def _scan_rows(slopes, rows, max_p, provenance):
    reports = []
    for i in rows:
        m1 = slopes[i]
        for m2 in slopes[i + 1:]:
            for label, outer in zip(OUTER_LABELS, equidistant_slopes(m1, m2)):
                if distance(m1, outer) > max_p:
                    continue
                report = _evaluate(m1, m2, outer, '%s outer=%s' % (provenance, label))
                if report.classification != Classification.NEITHER:
                    reports.append(report)
    return reports


def _emit(name, bounds, reports):
    scan_started.send(sender=CandidateReport, name=name, bounds=bounds)
    count = 0
    for report in reports:
        candidate_found.send(sender=CandidateReport, report=report)
        count += 1
        yield report
    scan_finished.send(sender=CandidateReport, name=name, count=count)
    logger.info('%s scan %s emitted %d reports' % (name, bounds, count))


def _check_bound(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise CosmeticError('%s must be a positive integer, got %r' % (name, value))


def scan_meridians(max_p, max_denominator, max_numerator=None, workers=None):
    """Scans all pairs of distinct meridians from :func:`bounded_slopes` and
    yields the reports with distance at most ``max_p`` which are not
    classified ``neither``.

    The reports are sorted by ``(dist, meridians, outer)`` before they are
    yielded, so the stream does not depend on the number of workers.

    **Parameters:**

    max_p
        The largest distance (order of the filled lens spaces) reported.

    max_denominator, max_numerator
        The bounds of the meridian slopes.

    workers
        Worker processes; defaults to ``COSMETIC_SEARCH_WORKERS``.
    """
    _check_bound('max_p', max_p)
    _check_bound('max_denominator', max_denominator)
    if max_numerator is not None:
        _check_bound('max_numerator', max_numerator)
    if workers is None:
        workers = settings.COSMETIC_SEARCH_WORKERS

    slopes = bounded_slopes(max_denominator, max_numerator)
    provenance = 'scan max_p=%d max_den=%d max_num=%d' % (
        max_p, max_denominator, max_denominator if max_numerator is None else max_numerator)
    bounds = {'max_p': max_p, 'max_denominator': max_denominator, 'max_numerator': max_numerator}

    reports = []
    if workers <= 1:
        reports = _scan_rows(slopes, range(len(slopes)), max_p, provenance)
    else:
        chunk = settings.COSMETIC_SEARCH_CHUNK_SIZE
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_scan_rows, slopes, range(start, min(start + chunk, len(slopes))),
                                       max_p, provenance)
                       for start in range(0, len(slopes), chunk)]
            for future in as_completed(futures):
                reports.extend(future.result())
        logger.debug('collected %d reports from %d chunks' % (len(reports), len(futures)))

    reports.sort(key=CandidateReport.sort_key)
    return _emit('meridians', bounds, reports)


def heegaard_swap_pairs(p):
    """Returns the pairs ``(q, q')`` with ``0 < q < q' < p``, both units and
    ``q*q' == 1 mod p``. Swapping the sides of the Heegaard torus of
    ``L(p, q)`` gives ``L(p, q')``.
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise CosmeticError('p must be an integer >= 2, got %r' % (p,))
    pairs = []
    for q in units(p):
        inverse = mod_inverse(q, p)
        if q < inverse:
            pairs.append((q, inverse))
    return pairs


def self_inverse_units(p):
    """Returns the units ``q`` mod ``p`` with ``q*q == 1 mod p``.
    """
    return [q for q in units(p) if q * q % p == 1 % p]


def negation_meridians(lens):
    """Returns meridians ``u/p`` and ``-u/p`` with ``u == 1/q mod p``. With
    the outer slope ``1/0`` they fill to ``lens`` and its reverse.
    """
    u = mod_inverse(lens.q, lens.p)
    return Slope(u, lens.p), Slope(-u, lens.p)


def scan_type_iv(k_max):
    """Yields two reports per family index ``k = 1 .. k_max``, one for
    ``L(2(k+1)^2, 2k+3)`` and one for ``L(2k^2, 2k-1)``, each realized by a
    negation pair of meridians and flagged as a non-example.
    """
    _check_bound('k_max', k_max)

    def reports():
        for k in range(1, k_max + 1):
            record = type_iv_family(k)
            for label, pair in (('plus', record.pair_plus), ('minus', record.pair_minus)):
                m1, m2 = negation_meridians(pair[0])
                yield _evaluate(m1, m2, MERIDIAN, 'type-iv k=%d pair=%s' % (k, label),
                                family_is_non_example=record.family_is_non_example)

    return _emit('type-iv', {'k_max': k_max}, reports())
