//! Harmonic analysis on Z/dZ and the trace-parameter solutions that make the
//! framed trace vanish on the framed Temperley-Lieb ideal.

use std::fmt;
use std::str::FromStr;

use crate::coeff::{sc, Cyclotomic, Scalar};
use crate::markov::{TraceError, TraceParams, Tracer};
use crate::ybalgebra::{idempotent_e, ideal_generator, pattern_12, IdealKind, Letter};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CyclicError {
    #[error("modulus mismatch: {0} vs {1}")]
    Modulus(u32, u32),
    #[error("invalid support profile: {0}")]
    Profile(String),
    #[error("branch {0} is incompatible with the profile")]
    Branch(u8),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("arithmetic: {0}")]
    Arith(String),
}

/// `ζ_d^e` as a scalar.
pub fn zeta(d: u32, e: i64) -> Scalar {
    Scalar::cyclotomic(Cyclotomic::zeta_pow(d, e))
}

/// A function Z/dZ → scalars.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicFunction {
    d: u32,
    values: Vec<Scalar>,
}

impl CyclicFunction {
    pub fn new(values: Vec<Scalar>) -> Self {
        assert!(!values.is_empty(), "a cyclic function needs d >= 1 values");
        CyclicFunction { d: values.len() as u32, values }
    }

    pub fn zero(d: u32) -> Self {
        CyclicFunction { d, values: vec![Scalar::zero(); d as usize] }
    }

    /// The constant function 𝟏.
    pub fn ones(d: u32) -> Self {
        CyclicFunction { d, values: vec![Scalar::one(); d as usize] }
    }

    pub fn delta(d: u32, a: i64) -> Self {
        let mut f = Self::zero(d);
        f.values[a.rem_euclid(d as i64) as usize] = Scalar::one();
        f
    }

    /// The character `k ↦ ζ_d^{mk}`.
    pub fn character(d: u32, m: i64) -> Self {
        CyclicFunction { d, values: (0..d as i64).map(|k| zeta(d, m * k)).collect() }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn at(&self, k: i64) -> &Scalar {
        &self.values[k.rem_euclid(self.d as i64) as usize]
    }

    fn check(&self, o: &Self) -> Result<(), CyclicError> {
        if self.d != o.d {
            return Err(CyclicError::Modulus(self.d, o.d));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, CyclicError> {
        self.check(o)?;
        Ok(CyclicFunction { d: self.d, values: self.values.iter().zip(&o.values).map(|(a, b)| a.add(b)).collect() })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        CyclicFunction { d: self.d, values: self.values.iter().map(|a| a.mul(s)).collect() }
    }

    /// Pointwise product.
    pub fn pointwise(&self, o: &Self) -> Result<Self, CyclicError> {
        self.check(o)?;
        Ok(CyclicFunction { d: self.d, values: self.values.iter().zip(&o.values).map(|(a, b)| a.mul(b)).collect() })
    }

    /// `(f∗g)(x) = Σ_y f(y) g(x−y)`.
    pub fn convolve(&self, o: &Self) -> Result<Self, CyclicError> {
        self.check(o)?;
        let d = self.d as i64;
        let values = (0..d)
            .map(|x| {
                (0..d).fold(Scalar::zero(), |acc, y| {
                    let a = self.at(y);
                    if a.is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(o.at(x - y)))
                    }
                })
            })
            .collect();
        Ok(CyclicFunction { d: self.d, values })
    }

    /// `f̂(k) = Σ_y f(y) ζ_d^{−ky}`.
    pub fn fourier(&self) -> Self {
        let d = self.d as i64;
        let values = (0..d)
            .map(|k| (0..d).fold(Scalar::zero(), |acc, y| acc.add(&self.at(y).mul(&zeta(self.d, -k * y)))))
            .collect();
        CyclicFunction { d: self.d, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn equals(&self, o: &Self) -> bool {
        self.d == o.d && self.values.iter().zip(&o.values).all(|(a, b)| a.equals(b))
    }
}

/// Support data for a solution: where the Fourier transforms of `x` and `y`
/// live, and which value `ŷ` takes on each nonzero frequency.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportProfile {
    pub d: u32,
    pub sup1: Vec<u32>,
    pub sup2: Vec<u32>,
    /// `ŷ = −duz` on `supy[0]`, `+duz` on `supy[1]`, `−duz(u²+1)` on
    /// `supy[2]`, `+duz(u²+1)` on `supy[3]`.
    pub supy: [Vec<u32>; 4],
}

fn sorted_set(v: &[u32]) -> Vec<u32> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

impl SupportProfile {
    pub fn new(d: u32, sup1: &[u32], sup2: &[u32], supy: [&[u32]; 4]) -> Result<Self, CyclicError> {
        let p = SupportProfile {
            d,
            sup1: sorted_set(sup1),
            sup2: sorted_set(sup2),
            supy: [sorted_set(supy[0]), sorted_set(supy[1]), sorted_set(supy[2]), sorted_set(supy[3])],
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), CyclicError> {
        let bad = |m: &str| Err(CyclicError::Profile(m.to_string()));
        let all = self.sup1.iter().chain(&self.sup2).chain(self.supy.iter().flatten());
        if all.clone().any(|&k| k >= self.d) {
            return bad("residue out of range");
        }
        if self.sup1.iter().any(|k| self.sup2.contains(k)) {
            return bad("sup1 and sup2 must be disjoint");
        }
        if self.sup1.is_empty() && self.sup2.is_empty() {
            return bad("empty support");
        }
        let zero_in_1 = self.sup1.contains(&0);
        if !zero_in_1 && !self.sup2.contains(&0) {
            return bad("0 must lie in sup1 or sup2");
        }
        let ys: Vec<u32> = self.supy.iter().flatten().copied().collect();
        if ys.contains(&0) || sorted_set(&ys).len() != ys.len() {
            return bad("y-supports must be disjoint and avoid 0");
        }
        let mut y12 = sorted_set(&[self.supy[0].clone(), self.supy[1].clone()].concat());
        if zero_in_1 {
            y12.push(0);
            y12.sort_unstable();
        }
        if y12 != self.sup1 {
            return bad("y1 and y2 must cover sup1 without 0");
        }
        if self.supy[2].iter().chain(&self.supy[3]).any(|k| !self.sup2.contains(k)) {
            return bad("y3 and y4 must lie in sup2");
        }
        Ok(())
    }

    /// Whether 0 lies in `sup1`.
    pub fn zero_in_sup1(&self) -> bool {
        self.sup1.contains(&0)
    }

    /// Branches compatible with the location of 0.
    pub fn branches(&self) -> [u8; 2] {
        if self.zero_in_sup1() {
            [1, 2]
        } else {
            [3, 4]
        }
    }
}

impl fmt::Display for SupportProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[u32]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "sup1={};sup2={};y1={};y2={};y3={};y4={}",
            j(&self.sup1),
            j(&self.sup2),
            j(&self.supy[0]),
            j(&self.supy[1]),
            j(&self.supy[2]),
            j(&self.supy[3])
        )
    }
}

impl SupportProfile {
    /// Parses `sup1=0,2;sup2=1;y1=2;y2=;y3=1;y4=` for modulus `d`.
    pub fn parse(s: &str, d: u32) -> Result<Self, CyclicError> {
        let mut sets: [Vec<u32>; 6] = Default::default();
        let keys = ["sup1", "sup2", "y1", "y2", "y3", "y4"];
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| CyclicError::Profile(format!("missing '=' in '{}'", part)))?;
            let idx = keys
                .iter()
                .position(|key| *key == k.trim())
                .ok_or_else(|| CyclicError::Profile(format!("unknown key '{}'", k.trim())))?;
            for r in v.split(',').map(str::trim).filter(|r| !r.is_empty()) {
                sets[idx].push(r.parse().map_err(|_| CyclicError::Profile(format!("bad residue '{}'", r)))?);
            }
        }
        SupportProfile::new(d, &sets[0], &sets[1], [&sets[2], &sets[3], &sets[4], &sets[5]])
    }
}

impl FromStr for SupportProfile {
    type Err = CyclicError;

    /// Parses with `d` inferred as one more than the largest residue; use
    /// [`SupportProfile::parse`] when `d` is known.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let max = s
            .split(|c| c == ';' || c == ',' || c == '=')
            .filter_map(|t| t.trim().parse::<u32>().ok())
            .max()
            .unwrap_or(0);
        SupportProfile::parse(s, max + 1)
    }
}

/// Every valid profile for modulus `d`, in a fixed order: 0 in `sup1` before
/// 0 in `sup2`, then the nonzero residues' roles in lexicographic order.
pub fn enumerate_profiles(d: u32) -> Vec<SupportProfile> {
    // Per nonzero residue: 0 = outside, 1/2 = sup1 with y1/y2, 3 = sup2 with
    // ŷ = 0, 4/5 = sup2 with y3/y4.
    let mut out = Vec::new();
    let rest = d.saturating_sub(1) as usize;
    for zero_in_1 in [true, false] {
        let mut choice = vec![0u8; rest];
        loop {
            let mut sup1 = Vec::new();
            let mut sup2 = Vec::new();
            let mut supy: [Vec<u32>; 4] = Default::default();
            if zero_in_1 {
                sup1.push(0);
            } else {
                sup2.push(0);
            }
            for (i, &c) in choice.iter().enumerate() {
                let k = i as u32 + 1;
                match c {
                    1 | 2 => {
                        sup1.push(k);
                        supy[c as usize - 1].push(k);
                    }
                    3 => sup2.push(k),
                    4 | 5 => {
                        sup2.push(k);
                        supy[c as usize - 2].push(k);
                    }
                    _ => {}
                }
            }
            out.push(SupportProfile { d, sup1, sup2, supy });
            let mut i = rest;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if choice[i] < 5 {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 0;
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if rest == 0 || i == usize::MAX {
                break;
            }
        }
    }
    out
}

/// The coefficient of `χ_0` inside the bracket of the `y` formula for each
/// branch: `−1/v`, `v`, `−(u²+1)/v`, `(v²−1)/v`.
pub fn branch_coefficient(branch: u8) -> Option<Scalar> {
    let vi = sc::vpow(-1);
    let u2p1 = sc::upow(2).add(&sc::int(1));
    match branch {
        1 => Some(vi.scale_q(&crate::coeff::Q::int(-1))),
        2 => Some(sc::v()),
        3 => Some(u2p1.mul(&vi).scale_q(&crate::coeff::Q::int(-1))),
        4 => Some(sc::vpow(2).sub(&sc::int(1)).mul(&vi)),
        _ => None,
    }
}

/// Trace parameters as functions on Z/dZ.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub x: CyclicFunction,
    pub y: CyclicFunction,
    pub z: Scalar,
}

impl Solution {
    pub fn params(&self) -> Result<TraceParams, CyclicError> {
        Ok(TraceParams::new(self.x.d(), self.z.clone(), self.x.values().to_vec(), self.y.values().to_vec())?)
    }
}

/// Builds `(x, y, z)` for a profile with an explicit `χ_0` coefficient.
pub fn build_solution_with(profile: &SupportProfile, chi0: &Scalar) -> Result<Solution, CyclicError> {
    profile.validate()?;
    let d = profile.d;
    let u = sc::u();
    let u2p1 = sc::upow(2).add(&sc::int(1));
    let n1 = profile.sup1.len() as i64;
    let n2 = profile.sup2.len() as i64;
    let denom = u.mul(&sc::int(n1)).add(&u.mul(&u2p1).mul(&sc::int(n2)));
    let z = denom.inv().map_err(|e| CyclicError::Arith(e.to_string()))?.scale_q(&crate::coeff::Q::int(-1));
    let char_sum = |set: &[u32], k: i64| set.iter().fold(Scalar::zero(), |a, &m| a.add(&zeta(d, m as i64 * k)));
    let mut xs = Vec::with_capacity(d as usize);
    let mut ys = Vec::with_capacity(d as usize);
    let neg_uz = u.mul(&z).scale_q(&crate::coeff::Q::int(-1));
    for k in 0..d as i64 {
        let xk = neg_uz.mul(&char_sum(&profile.sup1, k).add(&u2p1.mul(&char_sum(&profile.sup2, k))));
        xs.push(if k == 0 { xk.reduced() } else { xk });
        let bracket = chi0
            .add(&char_sum(&profile.supy[0], k))
            .sub(&char_sum(&profile.supy[1], k))
            .add(&u2p1.mul(&char_sum(&profile.supy[2], k)))
            .sub(&u2p1.mul(&char_sum(&profile.supy[3], k)));
        ys.push(neg_uz.mul(&bracket));
    }
    if !xs[0].equals(&Scalar::one()) {
        return Err(CyclicError::Arith("x_0 did not normalize to 1".into()));
    }
    xs[0] = Scalar::one();
    Ok(Solution { x: CyclicFunction::new(xs), y: CyclicFunction::new(ys), z })
}

/// Builds the solution for branch 1–4.
pub fn build_solution(profile: &SupportProfile, branch: u8) -> Result<Solution, CyclicError> {
    if !profile.branches().contains(&branch) {
        return Err(CyclicError::Branch(branch));
    }
    build_solution_with(profile, &branch_coefficient(branch).ok_or(CyclicError::Branch(branch))?)
}

/// The operations the functional system needs: convolution, addition,
/// scaling and the function 𝟏. Implemented spatially and at one frequency.
pub trait ConvRing {
    type E: Clone;
    fn d(&self) -> u32;
    fn conv(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn scale(&self, a: &Self::E, s: &Scalar) -> Self::E;
    fn ones(&self) -> Self::E;
}

/// Functions on Z/dZ under convolution.
pub struct Spatial(pub u32);

impl ConvRing for Spatial {
    type E = CyclicFunction;

    fn d(&self) -> u32 {
        self.0
    }

    fn conv(&self, a: &CyclicFunction, b: &CyclicFunction) -> CyclicFunction {
        a.convolve(b).expect("matching modulus")
    }

    fn add(&self, a: &CyclicFunction, b: &CyclicFunction) -> CyclicFunction {
        a.add(b).expect("matching modulus")
    }

    fn scale(&self, a: &CyclicFunction, s: &Scalar) -> CyclicFunction {
        a.scale(s)
    }

    fn ones(&self) -> CyclicFunction {
        CyclicFunction::ones(self.0)
    }
}

/// Polynomials in one unknown with scalar coefficients (lowest degree first).
#[derive(Debug, Clone, PartialEq)]
pub struct UniPoly(pub Vec<Scalar>);

impl UniPoly {
    pub fn constant(c: Scalar) -> Self {
        UniPoly(vec![c]).trimmed()
    }

    pub fn unknown() -> Self {
        UniPoly(vec![Scalar::zero(), Scalar::one()])
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let zero = Scalar::zero();
        UniPoly((0..n).map(|i| self.0.get(i).unwrap_or(&zero).add(o.0.get(i).unwrap_or(&zero))).collect()).trimmed()
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly(vec![]);
        }
        let mut out = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly(out).trimmed()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        UniPoly(self.0.iter().map(|c| c.mul(s)).collect()).trimmed()
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc.mul(t).add(c))
    }

    fn monic(&self) -> Result<Self, CyclicError> {
        let lead = self.0.last().ok_or_else(|| CyclicError::Arith("zero polynomial".into()))?;
        let inv = lead.inv().map_err(|e| CyclicError::Arith(e.to_string()))?;
        Ok(UniPoly(self.0.iter().map(|c| c.mul(&inv).reduced()).collect()).trimmed())
    }

    fn rem(&self, o: &Self) -> Result<Self, CyclicError> {
        let od = o.degree().ok_or_else(|| CyclicError::Arith("division by zero polynomial".into()))?;
        let lead_inv = o.0[od].inv().map_err(|e| CyclicError::Arith(e.to_string()))?;
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < od {
                break;
            }
            let c = r.0[rd].mul(&lead_inv);
            let mut shifted = vec![Scalar::zero(); rd - od];
            shifted.extend(o.0.iter().map(|a| a.mul(&c)));
            r = r.add(&UniPoly(shifted).scale(&sc::int(-1)));
            r.0.iter_mut().for_each(|a| *a = a.reduced());
            r = r.trimmed();
            if r.degree() == Some(rd) {
                return Err(CyclicError::Arith("leading term failed to cancel".into()));
            }
        }
        Ok(r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Result<Self, CyclicError> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        a.monic()
    }
}

/// Fourier side at one frequency `k`: convolution becomes the product and 𝟏
/// becomes `d·δ_0`. Elements are polynomials in the unknown `ŷ(k)`.
pub struct Frequency {
    pub d: u32,
    pub k: u32,
}

impl ConvRing for Frequency {
    type E = UniPoly;

    fn d(&self) -> u32 {
        self.d
    }

    fn conv(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.mul(b)
    }

    fn add(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        a.add(b)
    }

    fn scale(&self, a: &UniPoly, s: &Scalar) -> UniPoly {
        a.scale(s)
    }

    fn ones(&self) -> UniPoly {
        UniPoly::constant(if self.k == 0 { sc::int(self.d as i64) } else { Scalar::zero() })
    }
}

fn lin<R: ConvRing>(r: &R, terms: &[(Scalar, &R::E)]) -> R::E {
    let mut it = terms.iter();
    let (s, e) = it.next().expect("nonempty");
    let mut acc = r.scale(e, s);
    for (s, e) in it {
        acc = r.add(&acc, &r.scale(e, s));
    }
    acc
}

/// Functional form of `A = Tr(e_1^{(m)} e_2 b_1 g_1 b_1 g_{1,2})` as a function of `m`.
pub fn functional_a<R: ConvRing>(r: &R, x: &R::E, y: &R::E, z: &Scalar) -> R::E {
    let d = r.d() as i64;
    let (du, dv, u) = (sc::du(), sc::dv(), sc::u());
    let z2 = z.mul(z);
    let one = r.ones();
    let xx = r.conv(x, x);
    let xy1 = r.conv(&r.conv(x, y), &one);
    let xyy = r.conv(&r.conv(x, y), y);
    let y1 = r.conv(y, &one);
    let yy = r.conv(y, y);
    let a1 = lin(r, &[(z.mul(&sc::frac(1, d)), &xx), (dv.mul(z).mul(&sc::frac(1, d * d)), &xy1)]);
    let a2 = lin(r, &[(sc::frac(1, d * d), &xyy), (du.clone(), &a1)]);
    let a3 = lin(r, &[(z2.clone(), x), (dv.mul(&z2).mul(&sc::frac(1, d)), &y1)]);
    let a4 = lin(r, &[(z.mul(&sc::frac(1, d)), &yy), (du.clone(), &a3)]);
    let a6 = lin(r, &[(Scalar::one(), &a3), (du, &a4)]);
    lin(r, &[(Scalar::one(), &a1), (u.clone(), &a2), (u.clone(), &a3), (sc::upow(2).mul(&sc::int(2)), &a4), (sc::upow(3), &a6)])
}

/// Functional form of `B = Tr(e_1^{(m)} e_2 b_1 g_1 b_1 g_2 g_1 b_1 g_{1,2})`.
pub fn functional_b<R: ConvRing>(r: &R, x: &R::E, y: &R::E, z: &Scalar) -> R::E {
    let d = r.d() as i64;
    let (du, dv, u) = (sc::du(), sc::dv(), sc::u());
    let dv2 = dv.mul(&dv);
    let z2 = z.mul(z);
    let one = r.ones();
    let xy = r.conv(x, y);
    let yy1 = r.conv(&r.conv(y, y), &one);
    let x1 = r.conv(x, &one);
    let y1 = r.conv(y, &one);
    let yyy = r.conv(&r.conv(y, y), y);
    let fd = |k: i64| sc::frac(1, k);
    let b1 = lin(
        r,
        &[
            (z.mul(&fd(d)), &xy),
            (du.mul(&z2), y),
            (dv.mul(z).mul(&fd(d * d)), &yy1),
            (z2.mul(&fd(d)).mul(&dv).mul(&du), &x1),
            (z2.mul(&fd(d)).mul(&dv2).mul(&du), &y1),
        ],
    );
    let b2 = lin(r, &[(z2.clone(), y), (z2.mul(&fd(d)).mul(&dv), &x1), (z2.mul(&fd(d)).mul(&dv2), &y1), (du.clone(), &b1)]);
    let b4 = lin(r, &[(Scalar::one(), &b1), (du.clone(), &b2)]);
    let b6 = lin(
        r,
        &[
            (fd(d * d), &yyy),
            (z.mul(&fd(d)).mul(&du), &xy),
            (du.mul(&dv).mul(z).mul(&fd(d * d)), &yy1),
            (du.clone(), &b1),
            (du.clone(), &b4),
        ],
    );
    lin(r, &[(Scalar::one(), &b1), (u.mul(&sc::int(2)), &b2), (sc::upow(2).mul(&sc::int(2)), &b4), (sc::upow(3), &b6)])
}

/// `d² Tr(r_B)` as a (constant) function.
pub fn functional_rb<R: ConvRing>(r: &R, x: &R::E, y: &R::E, z: &Scalar) -> R::E {
    let d = sc::int(r.d() as i64);
    let (u, v) = (sc::u(), sc::v());
    let one = r.ones();
    let x1 = r.conv(x, &one);
    let y1 = r.conv(y, &one);
    let u2v2 = sc::upow(2).mul(&sc::vpow(2));
    lin(
        r,
        &[
            (Scalar::one(), &r.conv(x, &x1)),
            (u2v2.clone(), &r.conv(y, &y1)),
            (v.mul(&sc::upow(2).add(&sc::int(1))), &r.conv(x, &y1)),
            (d.mul(z).mul(&u).mul(&sc::int(1).add(&u2v2)), &x1),
            (d.mul(z).mul(&sc::upow(3).mul(&sc::vpow(3)).add(&u.mul(&v))), &y1),
        ],
    )
}

/// Which coefficients to use in the cubic equations for `x∗x∗x` and `x∗x∗y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicVariant {
    /// `dzu(u²+2)` and `d²z²u²(u²+1)`, matching the direct trace of `r_{1,2}`.
    Certified,
    /// `dzu(u+2)` and `d²zu²(u²+1)` (alternative coefficients).
    Printed,
}

/// `x∗(x∗w) + c_1 x∗w + c_2 w` for `w = x` or `w = y`.
pub fn functional_cubic<R: ConvRing>(r: &R, x: &R::E, w: &R::E, z: &Scalar, variant: CubicVariant) -> R::E {
    let d = sc::int(r.d() as i64);
    let u = sc::u();
    let (c1, c2) = match variant {
        CubicVariant::Certified => (
            d.mul(z).mul(&u).mul(&sc::upow(2).add(&sc::int(2))),
            d.mul(&d).mul(z).mul(z).mul(&sc::upow(2)).mul(&sc::upow(2).add(&sc::int(1))),
        ),
        CubicVariant::Printed => (
            d.mul(z).mul(&u).mul(&u.add(&sc::int(2))),
            d.mul(&d).mul(z).mul(&sc::upow(2)).mul(&sc::upow(2).add(&sc::int(1))),
        ),
    };
    let xw = r.conv(x, w);
    lin(r, &[(Scalar::one(), &r.conv(x, &xw)), (c1, &xw), (c2, w)])
}

/// One line of a functional-system report.
#[derive(Debug, Clone)]
pub struct FunctionalItem {
    pub name: String,
    /// Gated items must hold; the others document alternative coefficient variants.
    pub gated: bool,
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct FunctionalReport {
    pub items: Vec<FunctionalItem>,
}

impl FunctionalReport {
    pub fn passed(&self) -> bool {
        self.items.iter().filter(|i| i.gated).all(|i| i.holds)
    }
}

/// Direct traces of the five conditions for every `m`, with bound parameters.
pub fn direct_conditions(p: &TraceParams) -> Result<[CyclicFunction; 5], CyclicError> {
    use Letter::{B, G};
    let d = p.d;
    let mut tr = Tracer::new(p.clone());
    let g12 = pattern_12(3, d).map_err(TraceError::from)?;
    let e2 = idempotent_e(2, 3, 0, 3, d).map_err(TraceError::from)?;
    let rb = tr.trace(&ideal_generator(IdealKind::RB, 2, d).map_err(TraceError::from)?)?;
    let mut cols: [Vec<Scalar>; 5] = Default::default();
    let words: [&[Letter]; 4] = [&[B, G(1), B], &[B, G(1), B, G(2), G(1), B], &[], &[B]];
    for m in 0..d as i64 {
        let em = idempotent_e(1, 2, m, 3, d).map_err(TraceError::from)?.mul(&e2).map_err(TraceError::from)?;
        for (i, w) in words.iter().enumerate() {
            let e = em.mul_word(w).map_err(TraceError::from)?.mul(&g12).map_err(TraceError::from)?;
            let slot = if i < 2 { i } else { i + 1 };
            cols[slot].push(tr.trace(&e)?);
        }
        cols[2].push(rb.clone());
    }
    Ok(cols.map(CyclicFunction::new))
}

/// Evaluates the functional system for `(x, y, z)` and cross-checks each
/// equation against the direct traces.
pub fn verify_functional_system(x: &CyclicFunction, y: &CyclicFunction, z: &Scalar) -> Result<FunctionalReport, CyclicError> {
    x.check(y)?;
    let d = x.d();
    let r = Spatial(d);
    let d2 = sc::int((d * d) as i64);
    let fa = functional_a(&r, x, y, z);
    let fb = functional_b(&r, x, y, z);
    let f3 = functional_rb(&r, x, y, z);
    let f4 = functional_cubic(&r, x, x, z, CubicVariant::Certified);
    let f5 = functional_cubic(&r, x, y, z, CubicVariant::Certified);
    let p4 = functional_cubic(&r, x, x, z, CubicVariant::Printed);
    let p5 = functional_cubic(&r, x, y, z, CubicVariant::Printed);
    let mut items = vec![
        ("A vanishes", true, fa.is_zero()),
        ("B vanishes", true, fb.is_zero()),
        ("trace of r_B vanishes", true, f3.is_zero()),
        ("cubic in x vanishes", true, f4.is_zero()),
        ("cubic in x, y vanishes", true, f5.is_zero()),
        ("cubic in x vanishes with alternative coefficients", false, p4.is_zero()),
        ("cubic in x, y vanishes with alternative coefficients", false, p5.is_zero()),
    ];
    let params = TraceParams::new(d, z.clone(), x.values().to_vec(), y.values().to_vec())
        .map_err(CyclicError::from)?;
    let direct = direct_conditions(&params)?;
    let agree = [
        ("A agrees with the direct trace", fa.equals(&direct[0])),
        ("B agrees with the direct trace", fb.equals(&direct[1])),
        ("r_B form agrees with d^2 times the direct trace", f3.equals(&direct[2].scale(&d2))),
        ("cubic in x agrees with d^2 times the direct trace", f4.equals(&direct[3].scale(&d2))),
        ("cubic in x, y agrees with d^2 times the direct trace", f5.equals(&direct[4].scale(&d2))),
    ];
    items.extend(agree.iter().map(|&(n, h)| (n, true, h)));
    Ok(FunctionalReport {
        items: items.into_iter().map(|(n, g, h)| FunctionalItem { name: n.to_string(), gated: g, holds: h }).collect(),
    })
}

/// Value of `x̂(k)` on `Sup_1` (`first = true`) or `Sup_2`.
pub fn xhat_value(d: u32, first: bool) -> Scalar {
    let base = sc::int(-(d as i64)).mul(&sc::u()).mul(&sc::z());
    if first {
        base
    } else {
        base.mul(&sc::upow(2).add(&sc::int(1)))
    }
}

/// Solves for `ŷ(k)` at one frequency with `x̂(k)` fixed and `z` symbolic:
/// returns the monic gcd of the equations as a polynomial in `ŷ(k)`.
pub fn solve_frequency(d: u32, k: u32, xhat: &Scalar) -> Result<UniPoly, CyclicError> {
    let r = Frequency { d, k };
    let x = UniPoly::constant(xhat.clone());
    let y = UniPoly::unknown();
    let z = sc::z();
    let mut g = functional_a(&r, &x, &y, &z).gcd(&functional_b(&r, &x, &y, &z))?;
    let rb = functional_rb(&r, &x, &y, &z);
    if !rb.is_zero() {
        g = g.gcd(&rb)?;
    }
    g = g.gcd(&functional_cubic(&r, &x, &y, &z, CubicVariant::Certified))?;
    Ok(g)
}

/// True when `g` is exactly `Π (Y − c)` over the distinct candidates.
pub fn roots_are_exactly(g: &UniPoly, candidates: &[Scalar]) -> bool {
    let mut prod = UniPoly::constant(Scalar::one());
    for c in candidates {
        prod = prod.mul(&UniPoly(vec![c.scale_q(&crate::coeff::Q::int(-1)), Scalar::one()]));
    }
    g.degree() == prod.degree() && g.0.iter().zip(&prod.0).all(|(a, b)| a.equals(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_scalar;
    use crate::markov::{IdealChecker, TraceQuotient};

    fn s(t: &str) -> Scalar {
        parse_scalar(t).unwrap()
    }

    #[test]
    fn convolution_basics() {
        for d in 1..=4 {
            let f = CyclicFunction::new((0..d).map(|k| sc::int(k as i64 + 2)).collect());
            assert!(CyclicFunction::delta(d, 0).convolve(&f).unwrap().equals(&f));
            assert!(CyclicFunction::delta(d, 1).convolve(&CyclicFunction::delta(d, 2)).unwrap().equals(&CyclicFunction::delta(d, 3)));
            let one = CyclicFunction::ones(d);
            assert!(one.convolve(&one).unwrap().equals(&one.scale(&sc::int(d as i64))));
            assert!(CyclicFunction::delta(d, 0).fourier().equals(&one));
            assert!(one.fourier().equals(&CyclicFunction::delta(d, 0).scale(&sc::int(d as i64))));
        }
    }

    #[test]
    fn profile_counts_and_text() {
        assert_eq!(enumerate_profiles(1).len(), 2);
        assert_eq!(enumerate_profiles(2).len(), 12);
        assert_eq!(enumerate_profiles(3).len(), 72);
        for p in enumerate_profiles(3) {
            p.validate().unwrap();
            assert_eq!(SupportProfile::parse(&p.to_string(), 3).unwrap(), p);
        }
        let p = SupportProfile::parse("sup1=0,2;sup2=1;y1=2;y2=;y3=1;y4=", 3).unwrap();
        assert_eq!(p.sup1, vec![0, 2]);
        assert!(SupportProfile::parse("sup1=1;sup2=", 2).is_err());
    }

    #[test]
    fn classical_branches() {
        let p = SupportProfile::new(1, &[0], &[], [&[], &[], &[], &[]]).unwrap();
        let sol = build_solution(&p, 2).unwrap();
        assert!(sol.z.equals(&s("-1/u")));
        assert!(sol.y.at(0).equals(&sc::v()));
        let p = SupportProfile::new(1, &[], &[0], [&[], &[], &[], &[]]).unwrap();
        let sol = build_solution(&p, 4).unwrap();
        assert!(sol.z.equals(&s("-1/(u*(1+u^2))")));
        assert!(sol.y.at(0).equals(&s("(v^2-1)/((1+u^2)*v)")));
        assert!(build_solution(&p, 1).is_err());
    }

    #[test]
    fn full_support_in_sup2() {
        let p = SupportProfile::new(2, &[], &[0, 1], [&[], &[], &[], &[]]).unwrap();
        let sol = build_solution(&p, 3).unwrap();
        assert!(sol.x.at(1).is_zero());
        assert!(sol.z.equals(&s("-1/(2*u*(u^2+1))")));
    }

    #[test]
    fn solutions_pass_both_routes_d2() {
        let ck = IdealChecker::new(TraceQuotient::Ftlb, 3, 2).unwrap();
        for p in enumerate_profiles(2) {
            for b in p.branches() {
                let sol = build_solution(&p, b).unwrap();
                let rep = verify_functional_system(&sol.x, &sol.y, &sol.z).unwrap();
                assert!(rep.passed(), "{} branch {}: {:?}", p, b, rep.items);
                assert!(ck.check(&sol.params().unwrap()).unwrap().passed, "{} branch {}", p, b);
            }
        }
    }

    #[test]
    fn generic_parameters_fail() {
        let p = TraceParams::symbolic(2);
        let x = CyclicFunction::new(p.x.clone());
        let y = CyclicFunction::new(p.y.clone());
        let rep = verify_functional_system(&x, &y, &p.z).unwrap();
        assert!(!rep.passed());
        let by_name = |n: &str| rep.items.iter().find(|i| i.name == n).unwrap().holds;
        assert!(!by_name("cubic in x vanishes"));
        assert!(by_name("A agrees with the direct trace"));
        assert!(by_name("B agrees with the direct trace"));
    }

    #[test]
    fn frequency_solutions_nonzero_k() {
        for d in 2..=3u32 {
            let duz = sc::int(d as i64).mul(&sc::u()).mul(&sc::z());
            let g = solve_frequency(d, 1, &xhat_value(d, true)).unwrap();
            assert!(roots_are_exactly(&g, &[duz.scale_q(&crate::coeff::Q::int(-1)), duz.clone()]));
        }
    }
}
