//! Braid words of type B and the solid-torus link invariants `P`, `V`,
//! `X_S` and `ρ_S` evaluated from them.
//!
//! The square root of the rescaling factor is the formal variable `ℓ`
//! (`l` in text), reduced by `ℓ² = λ` so that every value has the form
//! `A + B·ℓ` with `A`, `B` free of `ℓ`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{sc, y as yv, CoeffError, Mono, Poly, Scalar, L};
use crate::cyclic::{build_solution, zeta, CyclicError, SupportProfile};
use crate::markov::{TraceError, TraceParams, Tracer};
use crate::ybalgebra::{AlgebraElement, Letter};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InvariantError {
    #[error("syntax error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator index {0} out of range for {1} strands")]
    Index(usize, usize),
    #[error("invalid invariant specification: {0}")]
    Spec(String),
    #[error("invalid skein site: {0}")]
    Site(String),
    #[error("parameter binding failed: {0}")]
    Binding(String),
    #[error(transparent)]
    Trace(#[from] TraceError),
}

impl From<CoeffError> for InvariantError {
    fn from(e: CoeffError) -> Self {
        InvariantError::Binding(e.to_string())
    }
}

impl From<CyclicError> for InvariantError {
    fn from(e: CyclicError) -> Self {
        InvariantError::Spec(e.to_string())
    }
}

/// One letter of a framed braid word of type B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidLetter {
    /// `σ_i` (`false`) or `σ_i^{-1}` (`true`).
    Sigma(usize, bool),
    /// `ρ_1` (`false`) or `ρ_1^{-1}` (`true`).
    Rho(bool),
    /// `t_j^k` with `0 < k < d`.
    T(usize, u32),
}

impl BraidLetter {
    pub fn inverse(self, d: u32) -> BraidLetter {
        match self {
            BraidLetter::Sigma(i, inv) => BraidLetter::Sigma(i, !inv),
            BraidLetter::Rho(inv) => BraidLetter::Rho(!inv),
            BraidLetter::T(j, k) => BraidLetter::T(j, (d - k) % d),
        }
    }

    /// Image in the algebra.
    pub fn to_letter(self) -> Letter {
        match self {
            BraidLetter::Sigma(i, false) => Letter::G(i),
            BraidLetter::Sigma(i, true) => Letter::GInv(i),
            BraidLetter::Rho(false) => Letter::B,
            BraidLetter::Rho(true) => Letter::BInv,
            BraidLetter::T(j, k) => Letter::T(j, k as i64),
        }
    }

    /// Largest strand index the letter touches.
    fn top(self) -> usize {
        match self {
            BraidLetter::Sigma(i, _) => i + 1,
            BraidLetter::Rho(_) => 1,
            BraidLetter::T(j, _) => j,
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidLetter::Sigma(i, false) => write!(f, "s{}", i),
            BraidLetter::Sigma(i, true) => write!(f, "s{}^-1", i),
            BraidLetter::Rho(false) => write!(f, "r1"),
            BraidLetter::Rho(true) => write!(f, "r1^-1"),
            BraidLetter::T(j, k) => write!(f, "t{}^{}", j, k),
        }
    }
}

/// A framed braid word on `n` strands with framings mod `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub n: usize,
    pub d: u32,
    pub letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(n: usize, d: u32, letters: Vec<BraidLetter>) -> Result<Self, InvariantError> {
        if n == 0 || d == 0 {
            return Err(InvariantError::Spec("n and d must be positive".into()));
        }
        let mut out = BraidWord { n, d, letters: Vec::with_capacity(letters.len()) };
        for l in letters {
            out.push(l)?;
        }
        Ok(out)
    }

    pub fn empty(n: usize, d: u32) -> Self {
        BraidWord { n, d, letters: Vec::new() }
    }

    /// Appends a letter; framings are reduced mod `d` and `t^0` is dropped.
    pub fn push(&mut self, l: BraidLetter) -> Result<(), InvariantError> {
        let l = match l {
            BraidLetter::T(j, k) => BraidLetter::T(j, k % self.d),
            other => other,
        };
        if let BraidLetter::Sigma(0, _) | BraidLetter::T(0, _) = l {
            return Err(InvariantError::Index(0, self.n));
        }
        if l.top() > self.n {
            return Err(InvariantError::Index(l.top() - usize::from(matches!(l, BraidLetter::Sigma(..))), self.n));
        }
        if !matches!(l, BraidLetter::T(_, 0)) {
            self.letters.push(l);
        }
        Ok(())
    }

    /// `self` followed by `l`.
    pub fn with(&self, l: BraidLetter) -> Result<Self, InvariantError> {
        let mut w = self.clone();
        w.push(l)?;
        Ok(w)
    }

    /// The same word on one more strand.
    pub fn widen(&self) -> Self {
        BraidWord { n: self.n + 1, d: self.d, letters: self.letters.clone() }
    }

    /// `c · self · c^{-1}`.
    pub fn conjugate(&self, c: &[BraidLetter]) -> Result<Self, InvariantError> {
        let mut w = BraidWord::empty(self.n, self.d);
        for &l in c.iter().chain(&self.letters) {
            w.push(l)?;
        }
        for &l in c.iter().rev() {
            w.push(l.inverse(self.d))?;
        }
        Ok(w)
    }

    /// Algebraic sum of the exponents of the `σ_i`.
    pub fn epsilon(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| match l {
                BraidLetter::Sigma(_, false) => 1,
                BraidLetter::Sigma(_, true) => -1,
                _ => 0,
            })
            .sum()
    }

    pub fn algebra_letters(&self) -> Vec<Letter> {
        self.letters.iter().map(|l| l.to_letter()).collect()
    }

    /// Image in `Y_{d,n}`.
    pub fn to_element(&self) -> Result<AlgebraElement, InvariantError> {
        Ok(AlgebraElement::from_word(self.n, self.d, &self.algebra_letters()).map_err(TraceError::from)?)
    }

    /// Uniformly random word of the given length.
    pub fn random<R: Rng>(rng: &mut R, n: usize, d: u32, len: usize) -> Self {
        let mut w = BraidWord::empty(n, d);
        while w.letters.len() < len {
            let _ = w.push(random_letter(rng, n, d));
        }
        w
    }
}

/// A random letter over `n` strands; `t` letters only when `d > 1`.
pub fn random_letter<R: Rng>(rng: &mut R, n: usize, d: u32) -> BraidLetter {
    let kinds: &[u8] = match (n > 1, d > 1) {
        (true, true) => &[0, 1, 2],
        (true, false) => &[0, 1],
        (false, true) => &[1, 2],
        (false, false) => &[1],
    };
    match kinds[rng.random_range(0..kinds.len())] {
        0 => BraidLetter::Sigma(rng.random_range(1..n), rng.random_bool(0.5)),
        2 => BraidLetter::T(rng.random_range(1..=n), rng.random_range(1..d)),
        _ => BraidLetter::Rho(rng.random_bool(0.5)),
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses whitespace-separated letters `s<i>`, `s<i>^-1`, `r1`, `r1^-1`,
/// `t<j>^<k>`.
pub fn parse_braid(text: &str, n: usize, d: u32) -> Result<BraidWord, InvariantError> {
    let mut w = BraidWord::empty(n, d);
    let mut pos = 0;
    for tok in text.split_inclusive(char::is_whitespace) {
        let col = pos + 1;
        pos += tok.len();
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let err = |msg: String| InvariantError::Parse { pos: col, msg };
        let (head, exp) = match tok.split_once('^') {
            Some((h, e)) => (h, Some(e.parse::<i64>().map_err(|_| err(format!("bad exponent in '{}'", tok)))?)),
            None => (tok, None),
        };
        let index = |s: &str| s.parse::<usize>().map_err(|_| err(format!("unknown token '{}'", tok)));
        let letter = if let Some(i) = head.strip_prefix('s') {
            let i = index(i)?;
            match exp {
                None | Some(1) => BraidLetter::Sigma(i, false),
                Some(-1) => BraidLetter::Sigma(i, true),
                Some(e) => return Err(err(format!("exponent {} not allowed on '{}'", e, head))),
            }
        } else if head == "r1" {
            match exp {
                None | Some(1) => BraidLetter::Rho(false),
                Some(-1) => BraidLetter::Rho(true),
                Some(e) => return Err(err(format!("exponent {} not allowed on 'r1'", e))),
            }
        } else if let Some(j) = head.strip_prefix('t') {
            let j = index(j)?;
            if d == 1 {
                return Err(err(format!("framing letter '{}' needs d > 1", tok)));
            }
            let k = exp.unwrap_or(1).rem_euclid(d as i64) as u32;
            BraidLetter::T(j, k)
        } else {
            return Err(err(format!("unknown token '{}'", tok)));
        };
        w.push(letter)?;
    }
    Ok(w)
}

/// The four invariant families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    /// `P`: generic trace on `H_n`, formal `ℓ`.
    Pb,
    /// `V`: the quotient-compatible specialization of `P`, `ℓ = u²`.
    Vb,
    /// `X_S`: generic `z`, E-system `x`, F-system `y`, formal `ℓ`.
    Xb,
    /// `ρ_S`: the specialization of `X_S` factoring through the quotient.
    RhoB,
}

impl InvariantKind {
    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Pb => "pb",
            InvariantKind::Vb => "vb",
            InvariantKind::Xb => "xb",
            InvariantKind::RhoB => "rhob",
        }
    }

    /// Whether `ℓ` is replaced by `u²` rather than kept formal.
    pub fn substitutes_ell(self) -> bool {
        matches!(self, InvariantKind::Vb | InvariantKind::RhoB)
    }
}

impl std::str::FromStr for InvariantKind {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pb" => Ok(InvariantKind::Pb),
            "vb" => Ok(InvariantKind::Vb),
            "xb" => Ok(InvariantKind::Xb),
            "rhob" | "rho" => Ok(InvariantKind::RhoB),
            other => Err(InvariantError::Spec(format!("unknown invariant kind '{}'", other))),
        }
    }
}

/// An invariant together with its bound trace parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantSpec {
    pub kind: InvariantKind,
    pub d: u32,
    /// The subset `S ⊂ Z/dZ`; `{0}` for the classical kinds.
    pub s: Vec<u32>,
    params: TraceParams,
    /// `λ`, or `λ_S`.
    lambda: Scalar,
    /// `E_S = 1/|S|`.
    e_s: Scalar,
}

impl InvariantSpec {
    /// `P` with symbolic `z` and `y`.
    pub fn pb() -> Self {
        let params = TraceParams::classical(sc::z(), Scalar::var(yv(0)));
        InvariantSpec::assemble(InvariantKind::Pb, 1, vec![0], params)
    }

    /// `V`: `z = −1/(u(1+u²))`, `y = (v²−1)/((1+u²)v)`.
    pub fn vb() -> Self {
        let u2p1 = sc::upow(2).add(&sc::int(1));
        let z = sc::u().mul(&u2p1).inv().expect("nonzero").neg();
        let y = sc::vpow(2).sub(&sc::int(1)).div(&u2p1.mul(&sc::v())).expect("nonzero");
        InvariantSpec::assemble(InvariantKind::Vb, 1, vec![0], TraceParams::classical(z, y))
    }

    /// `X_S` with `x_k = (1/|S|) Σ_{m∈S} ζ^{mk}`, `y_k = Σ_{m∈S} y_m ζ^{mk}`
    /// for free `y_m`, and symbolic `z`.
    pub fn xb(d: u32, s: &[u32]) -> Result<Self, InvariantError> {
        let s = checked_subset(d, s)?;
        let inv = Scalar::frac(1, s.len() as i64);
        let x = (0..d as i64)
            .map(|k| if k == 0 { Scalar::one() } else { char_sum(d, &s, k, |_| inv.clone()) })
            .collect();
        let y = (0..d as i64).map(|k| char_sum(d, &s, k, |m| Scalar::var(yv(m as usize)))).collect();
        let params = TraceParams::new(d, sc::z(), x, y)?;
        Ok(InvariantSpec::assemble(InvariantKind::Xb, d, s, params))
    }

    /// `ρ_S` with `S` carrying `ŷ = 0` away from `0`.
    pub fn rhob(d: u32, s: &[u32]) -> Result<Self, InvariantError> {
        let s = checked_subset(d, s)?;
        let profile = SupportProfile::new(d, &[], &s, [&[], &[], &[], &[]])?;
        InvariantSpec::rhob_profile(&profile)
    }

    /// `ρ_S` from a profile with empty `sup1`; `S = sup2`.
    pub fn rhob_profile(profile: &SupportProfile) -> Result<Self, InvariantError> {
        if !profile.sup1.is_empty() {
            return Err(InvariantError::Spec("the profile for rhob must have empty sup1".into()));
        }
        let sol = build_solution(profile, 4)?;
        Ok(InvariantSpec::assemble(InvariantKind::RhoB, profile.d, profile.sup2.clone(), sol.params()?))
    }

    fn assemble(kind: InvariantKind, d: u32, s: Vec<u32>, params: TraceParams) -> Self {
        let e_s = Scalar::frac(1, s.len() as i64);
        let lambda = if kind.substitutes_ell() {
            sc::upow(4)
        } else {
            let z = params.z.clone();
            z.sub(&sc::du().mul(&e_s)).div(&z).expect("z is nonzero")
        };
        InvariantSpec { kind, d, s, params, lambda, e_s }
    }

    pub fn params(&self) -> &TraceParams {
        &self.params
    }

    /// `λ`, or `λ_S`.
    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    /// `√λ`: the formal `ℓ`, or `u²`.
    pub fn sqrt_lambda(&self) -> Scalar {
        if self.kind.substitutes_ell() {
            sc::upow(2)
        } else {
            sc::ell()
        }
    }

    /// Rewrites with `ℓ² = λ` (a no-op for the substituted kinds).
    pub fn reduce(&self, s: &Scalar) -> Result<Scalar, InvariantError> {
        if self.kind.substitutes_ell() {
            Ok(s.clone())
        } else {
            reduce_ell(s, &self.lambda)
        }
    }
}

fn checked_subset(d: u32, s: &[u32]) -> Result<Vec<u32>, InvariantError> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() || s.iter().any(|&m| m >= d) {
        return Err(InvariantError::Spec(format!("S must be a nonempty subset of Z/{}Z", d)));
    }
    Ok(s)
}

fn char_sum(d: u32, s: &[u32], k: i64, weight: impl Fn(u32) -> Scalar) -> Scalar {
    s.iter().fold(Scalar::zero(), |a, &m| a.add(&weight(m).mul(&zeta(d, m as i64 * k))))
}

/// Rewrites every power of `ℓ` in the numerator with `ℓ² = λ`, leaving at
/// most `ℓ¹`. The denominator must not involve `ℓ`.
pub fn reduce_ell(s: &Scalar, lambda: &Scalar) -> Result<Scalar, InvariantError> {
    if s.den_factors().iter().any(|(f, _)| f.vars().contains(&L)) {
        return Err(InvariantError::Binding("ℓ occurs in a denominator".into()));
    }
    let mut even: Vec<(i32, Vec<(Mono, crate::coeff::Cyclotomic)>)> = Vec::new();
    for (m, c) in s.num().terms() {
        let e = m.exp(L);
        let rest = m.mul(&Mono::var(L, -e));
        let key = e.div_euclid(2);
        let rest = if e.rem_euclid(2) == 1 { rest.mul(&Mono::var(L, 1)) } else { rest };
        match even.iter_mut().find(|(k, _)| *k == key) {
            Some(slot) => slot.1.push((rest, c.clone())),
            None => even.push((key, vec![(rest, c.clone())])),
        }
    }
    let mut acc = Scalar::zero();
    for (q, terms) in even {
        acc = acc.add(&Scalar::from_poly(Poly::from_terms(terms)).mul(&lambda.pow(q)?));
    }
    Ok(acc.mul(&s.den_reciprocal()).reduced())
}

/// Evaluates one invariant, memoizing traces across calls.
pub struct Evaluator {
    spec: InvariantSpec,
    tracer: Tracer,
}

impl Evaluator {
    pub fn new(spec: InvariantSpec) -> Self {
        let tracer = Tracer::new(spec.params.clone());
        Evaluator { spec, tracer }
    }

    pub fn spec(&self) -> &InvariantSpec {
        &self.spec
    }

    /// Trace of the image of the word.
    pub fn trace(&mut self, w: &BraidWord) -> Result<Scalar, InvariantError> {
        if w.d != self.spec.d {
            return Err(InvariantError::Spec(format!("word has d = {} but the invariant has d = {}", w.d, self.spec.d)));
        }
        Ok(self.tracer.trace(&w.to_element()?)?)
    }

    /// Normalization factor for `n` strands and exponent sum `ε`.
    pub fn prefactor(&self, n: usize, eps: i64) -> Result<Scalar, InvariantError> {
        let sp = &self.spec;
        let k = eps - (n as i64 - 1);
        let base = if sp.kind.substitutes_ell() {
            // Λ = (1 − u⁴)/(u²(u − u^{-1})E_S) = −(1 + u²)/(E_S u).
            sc::upow(2).add(&sc::int(1)).neg().div(&sp.e_s.mul(&sc::u()))?.pow(n as i32 - 1)?.mul(&sc::upow(2 * eps as i32))
        } else {
            let lam = &sp.lambda;
            let c = Scalar::one().sub(lam).div(&sc::du().mul(&sp.e_s))?;
            let odd = k.rem_euclid(2) as i32;
            c.pow(n as i32 - 1)?.mul(&lam.pow(k.div_euclid(2) as i32)?).mul(&Scalar::var_pow(L, odd))
        };
        Ok(base)
    }

    pub fn evaluate(&mut self, w: &BraidWord) -> Result<Scalar, InvariantError> {
        let t = self.trace(w)?;
        Ok(self.prefactor(w.n, w.epsilon())?.mul(&t).reduced())
    }
}

/// Evaluates an invariant on one word.
pub fn evaluate(word: &BraidWord, spec: &InvariantSpec) -> Result<Scalar, InvariantError> {
    Evaluator::new(spec.clone()).evaluate(word)
}

/// Where a skein relation is applied: after `σ_i` or `ρ_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkeinSite {
    Sigma(usize),
    Rho,
}

impl fmt::Display for SkeinSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkeinSite::Sigma(i) => write!(f, "s{}", i),
            SkeinSite::Rho => write!(f, "r1"),
        }
    }
}

/// Outcome of one skein or Markov check.
#[derive(Debug, Clone, PartialEq)]
pub struct MoveCheck {
    pub label: String,
    pub passed: bool,
    /// The two sides when the check fails.
    pub detail: Option<(Scalar, Scalar)>,
}

/// Checks the skein relation at `site` for the base word `β`:
/// `ℓ^{-1}X(βσ_i) − ℓX(βσ_i^{-1}) = ((u−u^{-1})/d) Σ_s X(β t_i^s t_{i+1}^{-s})`
/// or `X(βρ_1) − X(βρ_1^{-1}) = ((v−v^{-1})/d) Σ_s X(β t_1^s)`.
pub fn verify_skein(ev: &mut Evaluator, base: &BraidWord, site: SkeinSite) -> Result<MoveCheck, InvariantError> {
    let d = base.d;
    let dinv = Scalar::frac(1, d as i64);
    let (lhs, rhs) = match site {
        SkeinSite::Sigma(i) => {
            if i == 0 || i >= base.n {
                return Err(InvariantError::Site(format!("s{} on {} strands", i, base.n)));
            }
            let l = ev.spec.sqrt_lambda();
            let plus = ev.evaluate(&base.with(BraidLetter::Sigma(i, false))?)?;
            let minus = ev.evaluate(&base.with(BraidLetter::Sigma(i, true))?)?;
            let lhs = plus.mul(&l.inv()?).sub(&minus.mul(&l));
            let mut sum = Scalar::zero();
            for s in 0..d {
                let w = base.with(BraidLetter::T(i, s))?.with(BraidLetter::T(i + 1, (d - s) % d))?;
                sum = sum.add(&ev.evaluate(&w)?);
            }
            (lhs, sc::du().mul(&dinv).mul(&sum))
        }
        SkeinSite::Rho => {
            let plus = ev.evaluate(&base.with(BraidLetter::Rho(false))?)?;
            let minus = ev.evaluate(&base.with(BraidLetter::Rho(true))?)?;
            let mut sum = Scalar::zero();
            for s in 0..d {
                sum = sum.add(&ev.evaluate(&base.with(BraidLetter::T(1, s))?)?);
            }
            (plus.sub(&minus), sc::dv().mul(&dinv).mul(&sum))
        }
    };
    let diff = ev.spec.reduce(&lhs.sub(&rhs))?;
    let passed = diff.is_zero() || diff.equals(&Scalar::zero());
    Ok(MoveCheck {
        label: format!("{} skein at {} on [{}]", ev.spec.kind.name(), site, base),
        passed,
        detail: (!passed).then(|| (ev.spec.reduce(&lhs).unwrap_or(lhs), ev.spec.reduce(&rhs).unwrap_or(rhs))),
    })
}

fn compare(label: String, a: Scalar, b: Scalar) -> MoveCheck {
    let passed = a.equals(&b);
    MoveCheck { label, passed, detail: (!passed).then_some((a, b)) }
}

/// Checks invariance of `word` under `trials` random conjugations and both
/// stabilizations `word·σ_n^{±1}` on `n + 1` strands.
pub fn verify_markov(ev: &mut Evaluator, word: &BraidWord, trials: usize, seed: u64) -> Result<Vec<MoveCheck>, InvariantError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = ev.spec.kind.name();
    let base = ev.evaluate(word)?;
    let mut out = Vec::with_capacity(trials + 2);
    for _ in 0..trials.max(1) {
        let len = rng.random_range(1..=3);
        let c: Vec<BraidLetter> = BraidWord::random(&mut rng, word.n, word.d, len).letters;
        let conj = word.conjugate(&c)?;
        let label = format!("{} conjugation of [{}] by [{}]", kind, word, BraidWord { letters: c, ..word.clone() });
        out.push(compare(label, base.clone(), ev.evaluate(&conj)?));
    }
    for inv in [false, true] {
        let w = word.widen().with(BraidLetter::Sigma(word.n, inv))?;
        out.push(compare(format!("{} stabilization [{}] -> [{}]", kind, word, w), base.clone(), ev.evaluate(&w)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_scalar;

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn grammar() {
        let w = parse_braid("s1 s2^-1 r1", 3, 1).unwrap();
        assert_eq!(w.letters, vec![BraidLetter::Sigma(1, false), BraidLetter::Sigma(2, true), BraidLetter::Rho(false)]);
        let w = parse_braid("t1^2 s1", 2, 3).unwrap();
        assert_eq!(w.letters, vec![BraidLetter::T(1, 2), BraidLetter::Sigma(1, false)]);
        assert_eq!(parse_braid("s3", 3, 1), Err(InvariantError::Index(3, 3)));
        assert!(matches!(parse_braid("s1 q2", 3, 1), Err(InvariantError::Parse { pos: 4, .. })));
        assert!(matches!(parse_braid("t1^1", 2, 1), Err(InvariantError::Parse { .. })));
        assert!(parse_braid("r1^2", 2, 1).is_err());
        assert_eq!(parse_braid("  ", 1, 1).unwrap().letters, vec![]);
        let w = parse_braid("s1^-1 r1^-1 t2^4 s2", 3, 3).unwrap();
        assert_eq!(parse_braid(&w.to_string(), 3, 3).unwrap(), w);
        assert_eq!(w.epsilon(), 0);
    }

    #[test]
    fn small_values() {
        assert!(evaluate(&BraidWord::empty(1, 1), &InvariantSpec::vb()).unwrap().is_one());
        let w = parse_braid("r1", 1, 1).unwrap();
        assert!(evaluate(&w, &InvariantSpec::pb()).unwrap().equals(&Scalar::var(yv(0))));
        let w = parse_braid("s1", 2, 1).unwrap();
        assert!(evaluate(&w, &InvariantSpec::pb()).unwrap().is_one());
        assert!(evaluate(&w, &InvariantSpec::vb()).unwrap().is_one());
        // Two unlinked unknots.
        let w = BraidWord::empty(2, 1);
        let v = evaluate(&w, &InvariantSpec::vb()).unwrap();
        assert!(v.equals(&s("-(1+u^2)/u")));
    }

    #[test]
    fn ell_reduction() {
        let lam = s("(z-u+1/u)/z");
        let r = reduce_ell(&s("l^3 + l^-1 + 2"), &lam).unwrap();
        let want = lam.mul(&sc::ell()).add(&lam.inv().unwrap().mul(&sc::ell())).add(&sc::int(2));
        assert!(r.equals(&want));
    }

    #[test]
    fn classical_degenerations() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut pb = Evaluator::new(InvariantSpec::pb());
        let mut xb = Evaluator::new(InvariantSpec::xb(1, &[0]).unwrap());
        let mut vb = Evaluator::new(InvariantSpec::vb());
        let mut rb = Evaluator::new(InvariantSpec::rhob(1, &[0]).unwrap());
        for _ in 0..10 {
            let n = rng.random_range(1..=3);
            let len = rng.random_range(0..=5);
            let w = BraidWord::random(&mut rng, n, 1, len);
            assert!(pb.evaluate(&w).unwrap().equals(&xb.evaluate(&w).unwrap()), "{}", w);
            assert!(vb.evaluate(&w).unwrap().equals(&rb.evaluate(&w).unwrap()), "{}", w);
        }
    }

    #[test]
    fn skein_and_markov_samples() {
        let specs = [
            InvariantSpec::pb(),
            InvariantSpec::vb(),
            InvariantSpec::xb(2, &[0, 1]).unwrap(),
            InvariantSpec::xb(3, &[0, 2]).unwrap(),
            InvariantSpec::rhob(2, &[0, 1]).unwrap(),
            InvariantSpec::rhob_profile(&SupportProfile::parse("sup1=;sup2=0,1,2;y1=;y2=;y3=1;y4=2", 3).unwrap()).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for spec in specs {
            let d = spec.d;
            let mut ev = Evaluator::new(spec);
            for _ in 0..4 {
                let n = rng.random_range(2..=3);
                let len = rng.random_range(0..=4);
                let w = BraidWord::random(&mut rng, n, d, len);
                for site in [SkeinSite::Sigma(rng.random_range(1..n)), SkeinSite::Rho] {
                    let c = verify_skein(&mut ev, &w, site).unwrap();
                    assert!(c.passed, "{} {:?}", c.label, c.detail);
                }
                for c in verify_markov(&mut ev, &w, 2, 5).unwrap() {
                    assert!(c.passed, "{} {:?}", c.label, c.detail);
                }
            }
        }
    }

    #[test]
    fn stabilization_examples() {
        let mut ev = Evaluator::new(InvariantSpec::rhob(2, &[0, 1]).unwrap());
        let a = ev.evaluate(&parse_braid("s1", 2, 2).unwrap()).unwrap();
        let b = ev.evaluate(&parse_braid("s1 s2", 3, 2).unwrap()).unwrap();
        assert!(a.equals(&b));
        let mut ev = Evaluator::new(InvariantSpec::pb());
        let a = ev.evaluate(&parse_braid("r1", 1, 1).unwrap()).unwrap();
        let b = ev.evaluate(&parse_braid("r1 s1", 2, 1).unwrap()).unwrap();
        assert!(a.equals(&b));
        let mut ev = Evaluator::new(InvariantSpec::vb());
        let w = parse_braid("s1 s1 s1", 2, 1).unwrap();
        let c = w.conjugate(&[BraidLetter::Sigma(1, false)]).unwrap();
        assert!(ev.evaluate(&w).unwrap().equals(&ev.evaluate(&c).unwrap()));
    }

    #[test]
    fn generic_parameters_break_stabilization() {
        let spec = InvariantSpec::assemble(InvariantKind::Xb, 2, vec![0, 1], TraceParams::symbolic(2));
        let mut ev = Evaluator::new(spec);
        let w = parse_braid("t1^1 r1", 1, 2).unwrap();
        let checks = verify_markov(&mut ev, &w, 1, 0).unwrap();
        assert!(checks.iter().any(|c| !c.passed));
    }
}
