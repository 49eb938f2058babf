"""Order functions of local rings at the origin (or a coordinate prime):
the plain adic order nu, its asymptotic companion nubar, the kernel of the
degree-one comparison map into the associated graded ring, and the slope
built from it.

A local ring is presented as polynomial ring / relations, localized at the
origin. Membership questions reduce to ideal membership in the polynomial
ring because every ideal we test against contains a power of the maximal
ideal.
"""

import itertools

from .arith import INF, ExtendedRational, SlopelabError, ext_min
from .groebner import (
    IdealPresentation,
    buchberger,
    ideal_member,
    ideal_power,
    ideal_sum,
    monomial_dimension,
    radical_member,
)
from .newton import nubar_monomial
from .poly import Monomial, Polynomial

NU_CAP_DEFAULT = 24
LIMIT_N_DEFAULT = 20


class CertificateRejected(SlopelabError):
    pass


class InexactNubar(SlopelabError):
    pass


class UnknownKernel(SlopelabError):
    pass


class NotALambdaSequence(SlopelabError):
    pass


class NotApplicable(SlopelabError):
    pass


class LocalRingPresentation:
    """Polynomial ring modulo relations, localized at the origin."""

    def __init__(self, ring, relations=()):
        gens = list(relations)
        for g in gens:
            if not g.is_zero() and g.constant_term():
                raise ValueError(
                    "relation %s does not vanish at the origin" % g)
        self.ring = ring
        self.relations = IdealPresentation(ring, gens)

    def maximal_ideal(self):
        return IdealPresentation(
            self.ring, [self.ring.var(v) for v in self.ring.variables])

    def is_zero_element(self, f):
        return ideal_member(f, self.relations)

    def initial_ideal(self):
        """Initial forms of the presented generators.

        This is the tangent cone relative to the presentation: exact when
        the relations are principal or monomial, a subideal in general.
        """
        return IdealPresentation(
            self.ring,
            [g.initial_form() for g in self.relations.generators])

    def embedding_dimension(self):
        rows = _linear_part_rows(self.relations.generators, self.ring)
        rank = len(_echelon(rows, self.ring.field))
        return len(self.ring.variables) - rank

    def dimension(self):
        """Krull dimension, through the initial ideal of the presentation."""
        init = self.initial_ideal()
        if not init.generators:
            return len(self.ring.variables)
        gb = buchberger(init)
        lead = IdealPresentation(
            self.ring,
            [Polynomial(self.ring, {m: self.ring.field.one})
             for m in gb.leading_monomials()])
        return monomial_dimension(lead)

    def excess(self):
        return self.embedding_dimension() - self.dimension()

    def __repr__(self):
        return "<local ring %r / (%s)>" % (
            self.ring,
            ", ".join(g.canonical_string() for g in self.relations.generators))


class NuValue:
    """Result of nu: an exact order, or a certified 'at least cap'."""

    __slots__ = ("value", "at_least")

    def __init__(self, value, at_least=False):
        self.value = value
        self.at_least = at_least

    def __repr__(self):
        tag = ">=" if self.at_least else "="
        return "nu %s %s" % (tag, self.value)


class _PowerCache:
    """Groebner bases of ideal^j + relations, built on demand.

    Local to one computation; nothing in the package keeps global state.
    """

    def __init__(self, presentation, ideal):
        self.presentation = presentation
        self.ideal = ideal
        self._bases = {}

    def basis(self, j):
        if j not in self._bases:
            total = ideal_sum(ideal_power(self.ideal, j),
                              self.presentation.relations)
            self._bases[j] = buchberger(total)
        return self._bases[j]


def nu(presentation, f, ideal=None, cap=NU_CAP_DEFAULT, _cache=None):
    """Adic order of f in the local ring: sup of j with f in ideal^j.

    Exact up to the cap; returns at_least=True when f survives that deep.
    The order is infinite exactly when f is zero in the ring.
    """
    if ideal is None:
        ideal = presentation.maximal_ideal()
    if presentation.is_zero_element(f):
        return NuValue(INF)
    cache = _cache or _PowerCache(presentation, ideal)
    j = 1
    while j <= cap:
        if not cache.basis(j).contains(f):
            return NuValue(ExtendedRational(j - 1))
        j += 1
    return NuValue(ExtendedRational(cap), at_least=True)


class ValuationCertificate:
    """Claimed Rees valuations of an ideal: monomial valuations together
    with the value each one takes on the ideal.

    Structural checks happen here; the deep claim (that these really are
    the Rees valuations of the ideal in the quotient) is the caller's to
    stand behind, and the acceptance suite corroborates it against the
    power-limit estimator on the corpus.
    """

    def __init__(self, entries):
        entries = list(entries)
        if not entries:
            raise CertificateRejected("empty certificate")
        self.entries = entries

    def validate(self, presentation, ideal):
        for valuation, claimed in self.entries:
            claimed = ExtendedRational(claimed) \
                if not isinstance(claimed, ExtendedRational) else claimed
            if claimed <= ExtendedRational(0) or claimed.is_infinite:
                raise CertificateRejected(
                    "claimed ideal value %s is not positive and finite"
                    % claimed)
            actual = valuation.ideal_value(ideal)
            if actual != claimed:
                raise CertificateRejected(
                    "valuation takes value %s on the ideal, certificate "
                    "claims %s" % (actual, claimed))

    def evaluate(self, f):
        best = INF
        for valuation, claimed in self.entries:
            claimed = ExtendedRational(claimed) \
                if not isinstance(claimed, ExtendedRational) else claimed
            v = valuation.value(f)
            if v.is_infinite:
                continue
            best = ext_min(best, v / claimed.as_fraction)
        return best


class NubarResult:
    def __init__(self, value, status, certificate=None, samples=None):
        self.value = value
        self.status = status  # "exact" or "lower-bound"
        self.certificate = certificate
        self.samples = samples or []

    def __repr__(self):
        return "nubar %s (%s)" % (self.value, self.status)


def nubar(presentation, f, ideal=None, strategy="auto", certificate=None,
          max_n=LIMIT_N_DEFAULT, cap=NU_CAP_DEFAULT, _cache=None):
    """Asymptotic order of f against an ideal of the local ring.

    Three routes:
      monomial    -- the Newton polyhedron formula; needs a monomial ideal
                     in a relation-free presentation; exact.
      certificate -- min of v(f)/v(ideal) over supplied valuations; exact
                     once the certificate validates.
      limit       -- max over n <= max_n of nu(f^n)/n; always a valid
                     lower bound, and exact (infinite) when some power of
                     f dies in the ring.
    """
    if ideal is None:
        ideal = presentation.maximal_ideal()
    if strategy == "auto":
        if not presentation.relations.generators and ideal.is_monomial_ideal():
            strategy = "monomial"
        elif certificate is not None:
            strategy = "certificate"
        else:
            strategy = "limit"

    if strategy == "monomial":
        if presentation.relations.generators:
            raise SlopelabError(
                "monomial strategy needs a relation-free presentation")
        return NubarResult(nubar_monomial(ideal, f), "exact",
                           certificate="newton-polyhedron")

    if strategy == "certificate":
        if certificate is None:
            raise CertificateRejected("no certificate supplied")
        certificate.validate(presentation, ideal)
        return NubarResult(certificate.evaluate(f), "exact",
                           certificate="valuation-certificate")

    if strategy != "limit":
        raise ValueError("unknown nubar strategy %r" % (strategy,))

    cache = _cache or _PowerCache(presentation, ideal)
    best = ExtendedRational(0)
    samples = []
    power = presentation.ring.one()
    base_order = None
    floor = 0
    for n in range(1, max_n + 1):
        power = power * f
        if presentation.is_zero_element(power):
            # f is nilpotent against the relations: the limit is infinite
            samples.append((n, INF))
            return NubarResult(INF, "exact", certificate="nilpotent-power",
                               samples=samples)
        # superadditivity lets the membership search start where the
        # previous power left off
        value = _nu_from(presentation, power, ideal, cap, cache, floor)
        samples.append((n, value.value))
        if base_order is None:
            base_order = value.value
        if not value.value.is_infinite:
            floor = int(value.value.as_fraction) \
                + (int(base_order.as_fraction) if not base_order.is_infinite
                   else 0)
            ratio = value.value / n
            if ratio > best:
                best = ratio
    return NubarResult(best, "lower-bound", certificate=None, samples=samples)


def _nu_from(presentation, f, ideal, cap, cache, floor):
    j = max(1, floor)
    if j > 1 and not cache.basis(j).contains(f):
        # the hint overshot (can happen only on bad floors); restart low
        j = 1
    while j <= cap:
        if not cache.basis(j).contains(f):
            return NuValue(ExtendedRational(j - 1))
        j += 1
    return NuValue(ExtendedRational(cap), at_least=True)


def graded_piece_member(presentation, f, b, strict=False, **kwargs):
    """Does f sit in the piece of asymptotic order b (or beyond)?"""
    result = nubar(presentation, f, **kwargs)
    if result.status != "exact":
        raise InexactNubar(
            "only a lower bound %s is available" % result.value)
    b = ExtendedRational(b) if not isinstance(b, ExtendedRational) else b
    return result.value > b if strict else result.value >= b


class KernelReport:
    def __init__(self, basis, t, classification, method):
        self.basis = tuple(basis)
        self.r = len(self.basis)
        self.t = t
        self.classification = classification
        self.method = method

    def __repr__(self):
        return "<kernel r=%d t=%d %s via %s>" % (
            self.r, self.t, self.classification, self.method)


def _linear_part_rows(polys, ring):
    rows = []
    n = len(ring.variables)
    for g in polys:
        row = [ring.field.zero] * n
        for mono, c in g.terms.items():
            if mono.degree() == 1:
                row[mono.exps.index(1)] = c
        rows.append(row)
    return rows


def _echelon(rows, field):
    work = [list(r) for r in rows]
    out = []
    cols = len(work[0]) if work else 0
    rank = 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = (work[rank][col].inverse() if hasattr(work[rank][col], "p")
               else 1 / work[rank][col])
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                c = work[r][col]
                work[r] = [a - c * b for a, b in zip(work[r], work[rank])]
        rank += 1
    for r in range(rank):
        out.append(work[r])
    return out


def _row_to_linear(ring, row):
    out = ring.zero()
    for i, c in enumerate(row):
        if c:
            out = out + ring.var(ring.variables[i]).scale(c)
    return out


def kernel_lambda(presentation, method=None):
    """Degree-one nilpotents of the associated graded ring of the origin.

    Exact routes: monomial initial ideal (radical by squarefree parts),
    principal initial ideal (is it a scalar times a power of a linear
    form?), and exhaustive linear-form enumeration over a small prime
    field. Anything else comes back labeled partial.
    """
    ring = presentation.ring
    init = presentation.initial_ideal()
    t = presentation.excess()

    def classify(r):
        return "extremal" if r == t else "non-extremal"

    if method is None:
        if init.is_monomial_ideal():
            method = "monomial"
        elif len(init.generators) == 1:
            method = "factorization"
        elif ring.char and len(ring.variables) <= 3:
            method = "enumeration"
        else:
            method = "partial"

    if method == "monomial":
        monos = init.monomial_generators() if init.generators else []
        basis = []
        for i, name in enumerate(ring.variables):
            for m in monos:
                if m.exps[i] and all(e == 0 for k, e in enumerate(m.exps)
                                     if k != i):
                    basis.append(ring.var(name))
                    break
        return KernelReport(basis, t, classify(len(basis)), "monomial")

    if method == "factorization":
        if len(init.generators) != 1:
            raise UnknownKernel("factorization route needs a principal ideal")
        g = init.generators[0]
        ell = _power_of_linear_form(g)
        basis = [ell] if ell is not None else []
        return KernelReport(basis, t, classify(len(basis)), "factorization")

    if method == "enumeration":
        p = ring.char
        n = len(ring.variables)
        if not p or n > 3:
            raise UnknownKernel(
                "enumeration needs a prime field and at most 3 variables")
        found = []
        for vec in itertools.product(range(p), repeat=n):
            if all(v == 0 for v in vec):
                continue
            # one representative per scalar line
            first = next(v for v in vec if v)
            if first != 1:
                continue
            ell = _row_to_linear(ring, [ring.field.from_int(v) for v in vec])
            if radical_member(ell, init):
                found.append([ring.field.from_int(v) for v in vec])
        rows = _echelon(found, ring.field)
        basis = [_row_to_linear(ring, r) for r in rows]
        return KernelReport(basis, t, classify(len(basis)), "enumeration-Fp")

    if method == "partial":
        found = []
        for name in ring.variables:
            if radical_member(ring.var(name), init):
                found.append(ring.var(name))
        r = len(found)
        classification = "extremal" if r == t else "unknown"
        return KernelReport(found, t, classification, "partial")

    raise ValueError("unknown kernel method %r" % (method,))


def _power_of_linear_form(g):
    """If g = c * ell^m for a linear form ell, return ell (monic); else None.

    Complete over Q and F_p: a linear form's power has a pure-power term in
    every variable the form touches, the candidate coefficients are forced,
    and a final expansion check settles it.
    """
    ring = g.ring
    m = g.degree()
    if m <= 1:
        return None  # a linear (or constant) generator leaves no nilpotents
    if g.initial_form() != g:
        return None  # not homogeneous, cannot be a power of a linear form
    h, mm = g, m
    if ring.char:
        s = 0
        while mm % ring.char == 0:
            mm //= ring.char
            s += 1
        if s:
            h = g.pth_power_root(s)
            if h is None:
                return None
    # now h should be c * ell^mm with the exponent prime to the characteristic
    pivot = None
    for i in range(len(ring.variables)):
        exps = [0] * len(ring.variables)
        exps[i] = mm
        c = h.terms.get(Monomial(exps))
        if c:
            pivot = (i, c)
            break
    if pivot is None:
        return None
    i, c = pivot
    coeffs = [ring.field.zero] * len(ring.variables)
    coeffs[i] = ring.field.one
    denom = c * ring.field.from_int(mm)
    for j in range(len(ring.variables)):
        if j == i:
            continue
        exps = [0] * len(ring.variables)
        exps[i] = mm - 1
        exps[j] = 1
        cj = h.terms.get(Monomial(exps))
        if cj:
            coeffs[j] = cj / denom
    ell = _row_to_linear(ring, coeffs)
    if (ell ** mm).scale(c) == h:
        return ell
    return None


class SlopeResult:
    def __init__(self, lower_bound, exact, witness, classification):
        self.lower_bound = lower_bound
        self.exact = exact
        self.witness = witness
        self.classification = classification

    def __repr__(self):
        tag = "=" if self.exact else ">="
        return "slope %s %s" % (tag, self.lower_bound)


def validate_lambda_sequence(presentation, kernel, candidate):
    """A usable sequence: elements of the maximal ideal whose linear parts
    span exactly the kernel."""
    ring = presentation.ring
    if len(candidate) != kernel.r:
        raise NotALambdaSequence(
            "need %d elements, got %d" % (kernel.r, len(candidate)))
    for gamma in candidate:
        if gamma.is_zero() or gamma.constant_term():
            raise NotALambdaSequence(
                "element %s does not vanish at the origin" % gamma)
    rows = _linear_part_rows(candidate, ring)
    want = _echelon(_linear_part_rows(kernel.basis, ring), ring.field)
    got = _echelon(rows, ring.field)
    if want != got:
        raise NotALambdaSequence(
            "linear parts do not span the kernel")


def _complement_variables(presentation, kernel):
    ring = presentation.ring
    rows = _echelon(_linear_part_rows(kernel.basis, ring), ring.field)
    complement = []
    for i, name in enumerate(ring.variables):
        unit = [ring.field.zero] * len(ring.variables)
        unit[i] = ring.field.one
        if len(_echelon(rows + [unit], ring.field)) > len(rows):
            rows = _echelon(rows + [unit], ring.field)
            complement.append(name)
    return complement


def _translation_shifts(presentation, kernel, max_coeff_deg=2):
    """Shift polynomials for the automatic slope search: multiples of a
    complement variable by monomials of positive degree up to the cap."""
    ring = presentation.ring
    complement = _complement_variables(presentation, kernel)
    units = [1, -1] if ring.char == 0 else list(range(1, ring.char))
    shifts = []
    n = len(ring.variables)
    for name in complement:
        base = ring.var(name)
        for exps in itertools.product(range(max_coeff_deg + 1), repeat=n):
            d = sum(exps)
            if d < 1 or d > max_coeff_deg:
                continue
            mono = ring.monomial(exps)
            for u in units:
                shifts.append((base * mono).scale(ring.field.from_int(u)))
    return shifts


def samuel_slope(presentation, candidates=(), certificate=None,
                 max_n=LIMIT_N_DEFAULT, search=True):
    """Slope of the local ring: 1 in the non-extremal case, otherwise the
    best min-over-sequence asymptotic order found.

    The extremal value is reported as a lower bound; sup attainment is
    never assumed here. The theorem cross-check can certify it exact.
    """
    kernel = kernel_lambda(presentation)
    if kernel.t == 0:
        raise NotApplicable("the presented ring is regular: no slope")
    if kernel.classification == "unknown":
        raise UnknownKernel("kernel method was inconclusive")
    if kernel.classification == "non-extremal":
        return SlopeResult(ExtendedRational(1), True, [], "non-extremal")

    shared = _PowerCache(presentation, presentation.maximal_ideal())

    def assess(gamma):
        return nubar(presentation, gamma, certificate=certificate,
                     strategy="auto" if certificate else "limit",
                     max_n=max_n, _cache=shared).value

    best_by_slot = []
    witness = []
    for ell in kernel.basis:
        options = [ell]
        if search:
            options += [ell + s for s in _translation_shifts(presentation,
                                                             kernel)]
        slot_best, slot_witness = None, None
        for gamma in options:
            try:
                validate_lambda_sequence(
                    presentation,
                    KernelReport([ell], kernel.t, "extremal", kernel.method),
                    [gamma])
            except NotALambdaSequence:
                continue
            value = assess(gamma)
            if slot_best is None or value > slot_best:
                slot_best, slot_witness = value, gamma
            if slot_best.is_infinite:
                break
        best_by_slot.append(slot_best)
        witness.append(slot_witness)

    bound = best_by_slot[0]
    for v in best_by_slot[1:]:
        bound = ext_min(bound, v)

    for seq in candidates:
        validate_lambda_sequence(presentation, kernel, list(seq))
        value = None
        for gamma in seq:
            v = assess(gamma)
            value = v if value is None else ext_min(value, v)
        if value > bound:
            bound = value
            witness = list(seq)

    exact = bound.is_infinite  # an infinite lower bound is already the sup
    return SlopeResult(bound, exact, witness, "extremal")


def check_reduction_by_d(presentation, kappa):
    """Do the initial forms of kappa cut the graded cone down to dimension 0?"""
    ring = presentation.ring
    d = presentation.dimension()
    kappa = list(kappa)
    if len(kappa) != d:
        raise ValueError("expected %d elements, got %d" % (d, len(kappa)))
    gens = list(presentation.initial_ideal().generators)
    gens += [k.initial_form() for k in kappa if not k.is_zero()]
    total = IdealPresentation(ring, gens)
    gb = buchberger(total)
    lead = IdealPresentation(
        ring, [Polynomial(ring, {m: ring.field.one})
               for m in gb.leading_monomials()])
    return monomial_dimension(lead) == 0


def kernel_lambda_at_prime(presentation, prime_vars):
    """Kernel classification at a coordinate prime, hypersurface case.

    Covers the shape that actually shows up at non-closed points of the
    corpus: the initial form along the prime is a combination of p^l-th
    powers of the prime variables with monomial unit-coefficients. Then
    the form is a p^l-th power of a linear form over the residue field
    exactly when all the coefficient ratios are p^l-th powers, which for
    monomials is a divisibility check on exponents.
    """
    ring = presentation.ring
    if len(presentation.relations.generators) != 1:
        raise UnknownKernel("prime-point kernels only for hypersurfaces")
    f = presentation.relations.generators[0]
    prime_idx = tuple(ring.index(v) for v in prime_vars)
    if f.min_degree_in(prime_idx) < 1:
        raise ValueError("the prime does not contain the relation")

    emb = len(prime_vars)
    for mono in f.terms:
        if mono.degree_in(prime_idx) == 1:
            emb = len(prime_vars) - 1  # a linear-in-prime part drops one
            break
    dim_local = len(prime_vars) - 1
    t = emb - dim_local

    f_in = f.initial_form_in(prime_idx)
    m = f_in.min_degree_in(prime_idx)
    p = ring.char
    if p and m >= 2:
        q, ell_exp = 1, 0
        while (m // q) % p == 0:
            q *= p
            ell_exp += 1
        if q == m and ell_exp >= 1:
            # pure Frobenius degree; check the shape term by term
            groups = {}
            shaped = True
            for mono, c in f_in.terms.items():
                support = [i for i in prime_idx if mono.exps[i]]
                if len(support) != 1 or mono.exps[support[0]] != q:
                    shaped = False
                    break
                unit_part = tuple(
                    e if i not in prime_idx else 0
                    for i, e in enumerate(mono.exps))
                if support[0] in groups:
                    shaped = False  # coefficient is not a single monomial
                    break
                groups[support[0]] = (unit_part, c)
            if shaped and groups:
                base = next(iter(groups.values()))
                all_powers = all(
                    all((e - b) % q == 0
                        for e, b in zip(exps, base[0]))
                    for exps, _ in groups.values())
                if all_powers:
                    basis = ["linear form over the residue field"]
                    return KernelReport(basis, t, "extremal" if 1 == t
                                        else "non-extremal", "frobenius-form")
                return KernelReport([], t,
                                    "extremal" if 0 == t else "non-extremal",
                                    "frobenius-form")
    return KernelReport([], t, "unknown", "partial")
