//! Verification suites: named, seeded batteries of exact checks that tie the
//! engine to closed forms, to independent oracles and to the invariance
//! properties of the link invariants.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{sc, y as yv, Scalar};
use crate::cyclic::{
    build_solution, enumerate_profiles, functional_a, functional_b, functional_cubic, functional_rb, roots_are_exactly,
    solve_frequency, verify_functional_system, xhat_value, CubicVariant, CyclicError, CyclicFunction, Frequency,
    UniPoly,
};
use crate::invariants::{
    verify_markov, verify_skein, BraidWord, Evaluator, InvariantError, InvariantKind, InvariantSpec, MoveCheck,
    SkeinSite,
};
use crate::markov::{reduced_trace_checks, trace_of_word, CheckRole, IdealChecker, TraceError, TraceParams, TraceQuotient, Tracer};
use crate::oracle::{bfs_coxeter, certify_algebra, word_normal_form_oracle, word_trace_oracle, OracleError};
use crate::ybalgebra::{idempotent_e, idempotent_f, ideal_generator, AlgebraElement, AlgebraError, IdealKind, Letter};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    Unknown(String),
    #[error("modulus {0} is outside the supported range {1}")]
    Modulus(u32, &'static str),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// The available suites, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Traces of the ideal generators, absorption identities and the two
    /// longer classical trace values.
    Identities,
    /// The four classical parameter pairs annihilate the ideal on `H_3`.
    ClassicalQuotient,
    /// Every support profile and branch passes the functional system and
    /// the exhaustive ideal check on three strands.
    FramedQuotient,
    /// Closed forms for traces of `r_B`, `r_{1,2}` and the `A_i`, `B_i` words.
    ClosedForms,
    /// Admitted values of `ŷ(k)` at each frequency.
    FrequencyRoots,
    Skein,
    Markov,
    /// Behaviour at `d = 1`.
    Degenerations,
    /// Engine against the brute-force oracles.
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Identities,
        Suite::ClassicalQuotient,
        Suite::FramedQuotient,
        Suite::ClosedForms,
        Suite::FrequencyRoots,
        Suite::Skein,
        Suite::Markov,
        Suite::Degenerations,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::ClassicalQuotient => "classical-quotient",
            Suite::FramedQuotient => "framed-quotient",
            Suite::ClosedForms => "closed-forms",
            Suite::FrequencyRoots => "frequency-roots",
            Suite::Skein => "skein",
            Suite::Markov => "markov",
            Suite::Degenerations => "degenerations",
            Suite::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| SuiteError::Unknown(s.to_string()))
    }
}

/// Knobs shared by every suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Restricts the moduli swept by the suite.
    pub d: Option<u32>,
    pub seed: u64,
    /// Random samples per family; `None` uses the suite default.
    pub samples: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { d: None, seed: 1, samples: None }
    }
}

/// One reported check. Ungated lines document alternative coefficient variants and
/// expected failures; they never fail the suite.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub label: String,
    pub gated: bool,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckLine {
    fn gate(label: impl Into<String>, passed: bool) -> Self {
        CheckLine { label: label.into(), gated: true, passed, detail: None }
    }

    fn note(label: impl Into<String>, passed: bool) -> Self {
        CheckLine { label: label.into(), gated: false, passed, detail: None }
    }

    fn with_detail(mut self, detail: Option<String>) -> Self {
        self.detail = detail;
        self
    }

    fn compare(label: impl Into<String>, got: &Scalar, want: &Scalar) -> Self {
        let passed = got.equals(want);
        CheckLine::gate(label, passed).with_detail((!passed).then(|| format!("got {} want {}", got, want)))
    }

    fn from_move(c: MoveCheck) -> Self {
        let detail = c.detail.map(|(a, b)| format!("{} vs {}", a, b));
        CheckLine::gate(c.label, c.passed).with_detail(detail)
    }

    /// `PASS`, `FAIL`, or `INFO` for ungated lines.
    pub fn status(&self) -> &'static str {
        match (self.gated, self.passed) {
            (true, true) => "PASS",
            (true, false) => "FAIL",
            (false, true) => "INFO holds",
            (false, false) => "INFO fails",
        }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status(), self.label)?;
        if let Some(d) = &self.detail {
            write!(f, " ({})", d)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().filter(|l| l.gated).all(|l| l.passed)
    }

    pub fn gated(&self) -> usize {
        self.lines.iter().filter(|l| l.gated).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| l.gated && !l.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{}", l)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "suite {}: {} ({} of {} checks passed)",
            self.suite,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.gated() - failed,
            self.gated()
        )
    }
}

/// Runs one suite.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport, SuiteError> {
    let lines = match suite {
        Suite::Identities => identities(opts)?,
        Suite::ClassicalQuotient => classical_quotient()?,
        Suite::FramedQuotient => framed_quotient(opts)?,
        Suite::ClosedForms => closed_forms(opts)?,
        Suite::FrequencyRoots => frequency_roots(opts)?,
        Suite::Skein => skein(opts)?,
        Suite::Markov => markov(opts)?,
        Suite::Degenerations => degenerations(opts)?,
        Suite::Oracle => oracle(opts)?,
    };
    Ok(SuiteReport { suite, lines })
}

fn moduli(opts: &SuiteOptions, default: &[u32], range: &'static str, ok: impl Fn(u32) -> bool) -> Result<Vec<u32>, SuiteError> {
    match opts.d {
        Some(d) if ok(d) => Ok(vec![d]),
        Some(d) => Err(SuiteError::Modulus(d, range)),
        None => Ok(default.to_vec()),
    }
}

fn sum(terms: &[Scalar]) -> Scalar {
    terms.iter().fold(Scalar::zero(), |a, b| a.add(b))
}

fn prod(terms: &[&Scalar]) -> Scalar {
    terms.iter().fold(Scalar::one(), |a, b| a.mul(b))
}

/// Closed forms for `τ(h_{1,2})` and `τ(h_B)` in symbolic `z`, `y`.
pub fn classical_generator_traces() -> (Scalar, Scalar) {
    let (u, v, z, y) = (sc::u(), sc::v(), sc::z(), Scalar::var(yv(0)));
    let u2 = sc::upow(2);
    let h12 = sum(&[
        prod(&[&u2.add(&sc::int(1)), &u, &u, &z, &z]),
        prod(&[&u2.add(&sc::int(2)), &u, &z]),
        Scalar::one(),
    ]);
    let uv = u.mul(&v);
    let hb = sum(&[
        prod(&[&uv, &uv, &y, &y]),
        prod(&[&uv.add(&uv.mul(&uv).mul(&uv)), &z, &y]),
        prod(&[&v.add(&u2.mul(&v)), &y]),
        prod(&[&u.add(&prod(&[&u2, &u, &v, &v])), &z]),
        Scalar::one(),
    ]);
    (h12, hb)
}

/// Closed forms for `τ(b_1 g_1 b_1 h_{1,2})` and
/// `τ(b_1 g_1 b_1 g_2 g_1 b_1 h_{1,2})` in symbolic `z`, `y`.
pub fn classical_loop_traces() -> (Scalar, Scalar) {
    let (u, v, z, y) = (sc::u(), sc::v(), sc::z(), Scalar::var(yv(0)));
    let u2 = sc::upow(2);
    let v2m1 = sc::vpow(2).sub(&sc::int(1));
    let loop_term = v.add(&v2m1.mul(&y));
    let first = sum(&[Scalar::one(), u.mul(&z), sc::upow(3).mul(&z)]);
    let second = sum(&[v.mul(&y).mul(&y), prod(&[&u, &loop_term, &z])]);
    let one = prod(&[&sc::vpow(-1), &u, &first, &second]);
    let inner = sum(&[
        prod(&[&sc::vpow(2), &y, &y, &y]),
        prod(&[&u, &u2.add(&sc::int(2)), &v, &y, &loop_term, &z]),
        prod(&[
            &u2,
            &u2.add(&sc::int(1)),
            &y.add(&prod(&[&v, &v2m1, &Scalar::one().add(&v.mul(&y))])),
            &z,
            &z,
        ]),
    ]);
    let two = prod(&[&sc::vpow(-2), &sc::upow(3), &inner]);
    (one, two)
}

fn identities(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    use Letter::{B, G};
    let mut out = Vec::new();
    let mut tr = Tracer::new(TraceParams::symbolic(1));
    let (h12_form, hb_form) = classical_generator_traces();
    let h12 = ideal_generator(IdealKind::H12, 3, 1)?;
    let hb = ideal_generator(IdealKind::HB, 2, 1)?;
    out.push(CheckLine::compare("trace of h_12 closed form", &tr.trace(&h12)?, &h12_form));
    out.push(CheckLine::compare("trace of h_B closed form", &tr.trace(&hb)?, &hb_form));

    for d in moduli(opts, &[1, 2, 3], "1..=3", |d| (1..=3).contains(&d))? {
        let mut gens = vec![(IdealKind::R12, "r_12"), (IdealKind::RB, "r_B")];
        if d == 1 {
            gens.splice(0..0, [(IdealKind::H12, "h_12"), (IdealKind::HB, "h_B")]);
        }
        for (kind, name) in gens {
            let r = ideal_generator(kind, 3, d)?;
            let absorbers: [(Letter, &str, Scalar); 2] = match kind {
                IdealKind::H12 | IdealKind::R12 => [(G(1), "g_1", sc::u()), (G(2), "g_2", sc::u())],
                IdealKind::HB | IdealKind::RB => [(B, "b_1", sc::v()), (G(1), "g_1", sc::u())],
            };
            for (l, lname, c) in absorbers {
                let want = r.scale(&c);
                let left = AlgebraElement::from_word(3, d, &[l])?.mul(&r)?;
                let right = r.mul_generator(l)?;
                out.push(CheckLine::gate(
                    format!("{g} {n} = {n} {g} = {c} {n} [d={d}]", g = lname, n = name, c = c, d = d),
                    left.equals(&want) && right.equals(&want),
                ));
            }
        }
    }

    let (one_form, two_form) = classical_loop_traces();
    let w1 = AlgebraElement::from_word(3, 1, &[B, G(1), B])?.mul(&h12)?;
    let w2 = AlgebraElement::from_word(3, 1, &[B, G(1), B, G(2), G(1), B])?.mul(&h12)?;
    out.push(CheckLine::compare("trace of b_1 g_1 b_1 h_12 closed form", &tr.trace(&w1)?, &one_form));
    out.push(CheckLine::compare("trace of b_1 g_1 b_1 g_2 g_1 b_1 h_12 closed form", &tr.trace(&w2)?, &two_form));
    Ok(out)
}

/// The four classical `(z, y)` pairs for which the trace factors through
/// the Temperley-Lieb quotient of type B.
pub fn classical_pairs() -> [(Scalar, Scalar); 4] {
    let u = sc::u();
    let v = sc::v();
    let u2p1 = sc::upow(2).add(&sc::int(1));
    let za = u.inv().expect("nonzero").neg();
    let zb = u.mul(&u2p1).inv().expect("nonzero").neg();
    let vinv = v.inv().expect("nonzero").neg();
    let yd = sc::vpow(2).sub(&sc::int(1)).div(&u2p1.mul(&v)).expect("nonzero");
    [(za.clone(), vinv.clone()), (za, v), (zb.clone(), vinv), (zb, yd)]
}

fn classical_quotient() -> Result<Vec<CheckLine>, SuiteError> {
    let ck = IdealChecker::new(TraceQuotient::Tlb, 3, 1)?;
    let mut out = Vec::new();
    let ideal_line = |label: String, p: &TraceParams, gated: bool, expect: bool| -> Result<CheckLine, SuiteError> {
        let r = ck.check(p)?;
        let detail = r.witness.as_ref().map(|(m, g, s)| format!("{} times {:?} traces to {}", m, g, s));
        let line = if gated { CheckLine::gate(label, r.passed == expect) } else { CheckLine::note(label, r.passed) };
        Ok(line.with_detail(if expect { detail } else { None }))
    };
    for (z, y) in classical_pairs() {
        let p = TraceParams::classical(z.clone(), y.clone());
        out.push(ideal_line(format!("z = {}, y = {} annihilates the ideal on 3 strands", z, y), &p, true, true)?);
    }
    out.push(ideal_line("generic z, y is rejected".into(), &TraceParams::symbolic(1), true, false)?);
    let p = TraceParams::classical(classical_pairs()[0].0.clone(), sc::v().neg());
    out.push(ideal_line("z = -1/u, y = -v annihilates the ideal".into(), &p, false, false)?);
    Ok(out)
}

fn framed_quotient(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    let mut out = Vec::new();
    for d in moduli(opts, &[2, 3], "1..=3", |d| (1..=3).contains(&d))? {
        let ck = IdealChecker::new(TraceQuotient::Ftlb, 3, d)?;
        for p in enumerate_profiles(d) {
            for b in p.branches() {
                let sol = build_solution(&p, b)?;
                let rep = verify_functional_system(&sol.x, &sol.y, &sol.z)?;
                let ideal = ck.check(&sol.params()?)?;
                let failing: Vec<&str> =
                    rep.items.iter().filter(|i| i.gated && !i.holds).map(|i| i.name.as_str()).collect();
                let label = format!("d={} {} branch {}", d, p, b);
                out.push(
                    CheckLine::gate(format!("{}: functional system", label), rep.passed())
                        .with_detail((!failing.is_empty()).then(|| failing.join("; "))),
                );
                out.push(CheckLine::gate(format!("{}: ideal on 3 strands", label), ideal.passed).with_detail(
                    ideal.witness.as_ref().map(|(m, g, s)| format!("{} times {:?} traces to {}", m, g, s)),
                ));
            }
        }
        let p = TraceParams::symbolic(d);
        let rep = verify_functional_system(&CyclicFunction::new(p.x.clone()), &CyclicFunction::new(p.y.clone()), &p.z)?;
        let ideal = ck.check(&p)?;
        out.push(CheckLine::gate(
            format!("d={} generic parameters are rejected by both routes", d),
            !rep.passed() && !ideal.passed,
        ));
    }
    Ok(out)
}

fn closed_forms(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    let mut out = Vec::new();
    for d in moduli(opts, &[1, 2, 3], "1..=3", |d| (1..=3).contains(&d))? {
        for c in reduced_trace_checks(d)? {
            let label = format!("d={} {}", d, c.label());
            out.push(match c.role {
                CheckRole::Identity => CheckLine::compare(label, &c.engine, &c.formula),
                CheckRole::PrintedVariant => CheckLine::note(label, c.passed),
            });
        }
    }
    Ok(out)
}

/// The admitted values of `ŷ(k)` for a frequency `k` and the set
/// (`first = true` for `x̂(k) = −duz`) that contains it.
pub fn admitted_yhat(d: u32, k: u32, first: bool) -> Vec<Scalar> {
    let (u, v, z) = (sc::u(), sc::v(), sc::z());
    let duz = prod(&[&sc::int(d as i64), &u, &z]);
    let u2p1 = sc::upow(2).add(&sc::int(1));
    match (k == 0, first) {
        (false, true) => vec![duz.neg(), duz],
        (false, false) => vec![Scalar::zero(), duz.mul(&u2p1).neg(), duz.mul(&u2p1)],
        (true, true) => vec![duz.div(&v).expect("nonzero"), duz.mul(&v).neg()],
        (true, false) => vec![
            duz.mul(&u2p1).div(&v).expect("nonzero"),
            duz.sub(&duz.mul(&v).mul(&v)).div(&v).expect("nonzero"),
        ],
    }
}

fn frequency_roots(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    let mut out = Vec::new();
    for d in moduli(opts, &[2, 3], "2..=3", |d| (2..=3).contains(&d))? {
        for k in 0..d {
            for first in [true, false] {
                let set = if first { "Sup_1" } else { "Sup_2" };
                let xhat = xhat_value(d, first);
                let cands = admitted_yhat(d, k, first);
                let r = Frequency { d, k };
                let x = UniPoly::constant(xhat.clone());
                let z = sc::z();
                let mut vanish = true;
                for c in &cands {
                    let y = UniPoly::constant(c.clone());
                    vanish &= functional_a(&r, &x, &y, &z).is_zero()
                        && functional_b(&r, &x, &y, &z).is_zero()
                        && functional_rb(&r, &x, &y, &z).is_zero()
                        && functional_cubic(&r, &x, &y, &z, CubicVariant::Certified).is_zero();
                }
                let shown: Vec<String> = cands.iter().map(|c| c.to_string()).collect();
                out.push(CheckLine::gate(
                    format!("d={} k={} in {}: each of {{{}}} solves the system", d, k, set, shown.join(", ")),
                    vanish,
                ));
                let g = solve_frequency(d, k, &xhat)?;
                out.push(
                    CheckLine::gate(
                        format!("d={} k={} in {}: no other value solves the system", d, k, set),
                        roots_are_exactly(&g, &cands),
                    )
                    .with_detail((!roots_are_exactly(&g, &cands)).then(|| format!("gcd has degree {:?}", g.degree()))),
                );
            }
        }
    }
    Ok(out)
}

fn invariant_specs(kind: InvariantKind) -> Result<Vec<InvariantSpec>, SuiteError> {
    let xb: [(u32, &[u32]); 6] = [(1, &[0]), (2, &[1]), (2, &[0, 1]), (3, &[1]), (3, &[0, 2]), (3, &[0, 1, 2])];
    let rhob: [(u32, &[u32]); 6] = [(1, &[0]), (2, &[0]), (2, &[0, 1]), (3, &[0]), (3, &[0, 2]), (3, &[0, 1, 2])];
    Ok(match kind {
        InvariantKind::Pb => vec![InvariantSpec::pb()],
        InvariantKind::Vb => vec![InvariantSpec::vb()],
        InvariantKind::Xb => xb.iter().map(|(d, s)| InvariantSpec::xb(*d, s)).collect::<Result<_, _>>()?,
        InvariantKind::RhoB => rhob.iter().map(|(d, s)| InvariantSpec::rhob(*d, s)).collect::<Result<_, _>>()?,
    })
}

const KINDS: [InvariantKind; 4] = [InvariantKind::Pb, InvariantKind::Vb, InvariantKind::Xb, InvariantKind::RhoB];

fn skein(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    let samples = opts.samples.unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for kind in KINDS {
        let mut evs: Vec<Evaluator> = invariant_specs(kind)?.into_iter().map(Evaluator::new).collect();
        for site_kind in 0..2 {
            for i in 0..samples {
                let slot = i % evs.len();
                let ev = &mut evs[slot];
                let d = ev.spec().d;
                let n = rng.random_range(if site_kind == 0 { 2..=3 } else { 1..=3 });
                let len = rng.random_range(0..=4);
                let w = BraidWord::random(&mut rng, n, d, len);
                let site = if site_kind == 0 { SkeinSite::Sigma(rng.random_range(1..n)) } else { SkeinSite::Rho };
                let mut line = CheckLine::from_move(verify_skein(ev, &w, site)?);
                line.label = format!("d={} {}", d, line.label);
                out.push(line);
            }
        }
    }
    Ok(out)
}

fn markov(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    let samples = opts.samples.unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    for kind in KINDS {
        let mut evs: Vec<Evaluator> = invariant_specs(kind)?.into_iter().map(Evaluator::new).collect();
        for i in 0..samples {
            let slot = i % evs.len();
            let ev = &mut evs[slot];
            let d = ev.spec().d;
            let n = rng.random_range(1..=3);
            let len = rng.random_range(0..=4);
            let w = BraidWord::random(&mut rng, n, d, len);
            for c in verify_markov(ev, &w, 1, rng.random())? {
                let mut line = CheckLine::from_move(c);
                line.label = format!("d={} {}", d, line.label);
                out.push(line);
            }
        }
    }
    Ok(out)
}

fn degenerations(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    use Letter::{B, G};
    let samples = opts.samples.unwrap_or(50);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut out = Vec::new();
    let mut pairs = [
        ("X_{0}", Evaluator::new(InvariantSpec::xb(1, &[0])?), "P", Evaluator::new(InvariantSpec::pb())),
        ("rho_{0}", Evaluator::new(InvariantSpec::rhob(1, &[0])?), "V", Evaluator::new(InvariantSpec::vb())),
    ];
    for _ in 0..samples {
        let n = rng.random_range(1..=3);
        let len = rng.random_range(0..=6);
        let w = BraidWord::random(&mut rng, n, 1, len);
        for (an, a, bn, b) in pairs.iter_mut() {
            out.push(CheckLine::compare(format!("d=1 {} equals {} on [{}]", an, bn, w), &a.evaluate(&w)?, &b.evaluate(&w)?));
        }
    }
    let one = AlgebraElement::one(3, 1);
    let mut idem = true;
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        idem &= idempotent_e(i, j, 0, 3, 1)?.equals(&one);
    }
    for i in 1..=3 {
        idem &= idempotent_f(i, 0, 3, 1)?.equals(&one);
    }
    out.push(CheckLine::gate("d=1 every e_{i,j} and f_i is the identity", idem));
    let g1 = AlgebraElement::from_word(3, 1, &[G(1)])?;
    let b1 = AlgebraElement::from_word(3, 1, &[B])?;
    let quad_g = g1.mul(&g1)?.equals(&one.add(&g1.scale(&sc::du())));
    let quad_b = b1.mul(&b1)?.equals(&one.add(&b1.scale(&sc::dv())));
    out.push(CheckLine::gate("d=1 g_1^2 = 1 + (u - 1/u) g_1 and b_1^2 = 1 + (v - 1/v) b_1", quad_g && quad_b));
    for _ in 0..samples {
        let n = rng.random_range(1..=3);
        let len = rng.random_range(0..=6);
        let w = BraidWord::random(&mut rng, n, 1, len);
        let letters = w.algebra_letters();
        let engine = AlgebraElement::from_word(n, 1, &letters)?;
        let hecke = word_normal_form_oracle(&letters, n, 1)?;
        out.push(CheckLine::gate(format!("d=1 product of [{}] matches plain Hecke rewriting", w), engine.equals(&hecke)));
    }
    Ok(out)
}

/// Random algebra words for the oracle gate: `n ≤ 3`, `d ≤ 3`, length ≤ 8.
pub fn oracle_words(count: usize, seed: u64) -> Vec<(usize, u32, Vec<Letter>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=3);
            let d = rng.random_range(1..=3);
            let len = rng.random_range(0..=8);
            let w = BraidWord::random(&mut rng, n, d, len);
            (n, d, w.algebra_letters())
        })
        .collect()
}

fn oracle(opts: &SuiteOptions) -> Result<Vec<CheckLine>, SuiteError> {
    let samples = opts.samples.unwrap_or(500);
    let mut out = Vec::new();
    let mut failures = Vec::new();
    let mut checked = 0;
    let params: Vec<TraceParams> = (1..=3).map(TraceParams::symbolic).collect();
    for (n, d, w) in oracle_words(samples, opts.seed) {
        if opts.d.is_some_and(|x| x != d) {
            continue;
        }
        let p = &params[d as usize - 1];
        let engine = trace_of_word(&w, n, d, p)?;
        let brute = word_trace_oracle(&w, n, d, p)?;
        checked += 1;
        if !engine.equals(&brute) {
            let text: Vec<String> = w.iter().map(|l| l.to_string()).collect();
            failures.push(format!("n={} d={} [{}]", n, d, text.join(" ")));
        }
    }
    out.push(
        CheckLine::gate(format!("engine trace equals oracle trace on {} seeded words", checked), failures.is_empty())
            .with_detail((!failures.is_empty()).then(|| failures.join("; "))),
    );
    for (n, want) in [(1, 2), (2, 8), (3, 48)] {
        let lens = bfs_coxeter(n);
        let max = lens.values().copied().max().unwrap_or(0);
        let agree = lens.iter().all(|(w, l)| w.length() == *l);
        out.push(CheckLine::gate(
            format!("breadth-first search on W_{} finds {} elements, longest {}, lengths agree", n, lens.len(), max),
            lens.len() == want && max == n * n && agree,
        ));
    }
    for n in 1..=3 {
        for d in moduli(opts, &[1, 2, 3], "1..=3", |d| (1..=3).contains(&d))? {
            let rep = certify_algebra(n, d, opts.seed)?;
            let mode = if rep.exhaustive { "all" } else { "sampled" };
            for (name, ok) in &rep.checks {
                out.push(CheckLine::gate(
                    format!("n={} d={} basis {}: {} ({} triples, {})", n, d, rep.basis_size, name, rep.triples, mode),
                    *ok,
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn admitted_values_are_distinct() {
        for d in 2..=3 {
            for k in 0..d {
                for first in [true, false] {
                    let c = admitted_yhat(d, k, first);
                    for i in 0..c.len() {
                        for j in i + 1..c.len() {
                            assert!(!c[i].equals(&c[j]));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn small_suites_pass() {
        let opts = SuiteOptions { d: Some(1), seed: 4, samples: Some(3) };
        for s in [Suite::Identities, Suite::ClassicalQuotient, Suite::Degenerations] {
            let rep = run_suite(s, &opts).unwrap();
            assert!(rep.passed(), "{}", rep);
        }
    }
}
