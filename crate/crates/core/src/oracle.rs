//! Brute-force cross-checks for the engine.
//!
//! Everything here avoids the signed-permutation normal form. Coxeter
//! elements are classes of reduced words under braid moves, Hecke products
//! are formed letter by letter with the quadratic relations, and traces
//! come from splitting off the top strand by hand-applied trace rules.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallvec::SmallVec;

use crate::coeff::{sc, Scalar};
use crate::coxeterb::SignedPermutation;
use crate::markov::TraceParams;
use crate::ybalgebra::{enumerate_basis, AlgebraElement, AlgebraError, BasisMonomial, Letter};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("rewriting step budget of {0} exceeded")]
    Budget(usize),
    #[error("letter {0} out of range for {1} strands")]
    Index(String, usize),
    #[error("unexpected shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Default number of braid-move expansions a single oracle call may use.
pub const DEFAULT_BUDGET: usize = 20_000_000;

/// Breadth-first search over `W_n` from the identity, acting on windows:
/// `r_1` negates the first entry, `s_i` swaps entries `i` and `i+1`.
pub fn bfs_coxeter(n: usize) -> HashMap<SignedPermutation, usize> {
    let start: Vec<i32> = (1..=n as i32).collect();
    let mut seen: HashMap<Vec<i32>, usize> = HashMap::new();
    seen.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let len = seen[&w];
        for g in 0..n {
            let mut next = w.clone();
            if g == 0 {
                next[0] = -next[0];
            } else {
                next.swap(g - 1, g);
            }
            if !seen.contains_key(&next) {
                seen.insert(next.clone(), len + 1);
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().map(|(w, l)| (SignedPermutation::from_window(&w).expect("valid window"), l)).collect()
}

/// A Coxeter word: `0` is `r_1`, `i ≥ 1` is `s_i`.
pub type Word = SmallVec<[u8; 12]>;

struct Budget {
    limit: usize,
    used: usize,
}

impl Budget {
    fn new(limit: usize) -> Self {
        Budget { limit, used: 0 }
    }

    fn spend(&mut self, k: usize) -> Result<(), OracleError> {
        self.used += k;
        if self.used > self.limit {
            Err(OracleError::Budget(self.limit))
        } else {
            Ok(())
        }
    }
}

/// Coxeter exponent `m(a, b)` for type B.
fn coxeter_m(a: u8, b: u8) -> usize {
    if a == b {
        1
    } else if a.min(b) == 0 && a.max(b) == 1 {
        4
    } else if a.abs_diff(b) == 1 && a.min(b) > 0 {
        3
    } else {
        2
    }
}

fn alternating(a: u8, b: u8, len: usize) -> Word {
    (0..len).map(|i| if i % 2 == 0 { a } else { b }).collect()
}

/// All words reachable from `w` by braid moves.
fn braid_class(w: &Word, budget: &mut Budget) -> Result<Vec<Word>, OracleError> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(w.clone());
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(cur) = queue.pop_front() {
        budget.spend(1)?;
        for i in 0..cur.len().saturating_sub(1) {
            let (a, b) = (cur[i], cur[i + 1]);
            if a == b {
                continue;
            }
            let m = coxeter_m(a, b);
            if i + m > cur.len() || cur[i..i + m] != alternating(a, b, m)[..] {
                continue;
            }
            let mut next = cur.clone();
            next[i..i + m].copy_from_slice(&alternating(b, a, m));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Whether no word in the braid class has two equal adjacent letters.
fn class_is_reduced(class: &[Word]) -> bool {
    class.iter().all(|w| w.windows(2).all(|p| p[0] != p[1]))
}

/// Image of strand `j` (1-based) under the underlying permutation of `w`,
/// so that `T_w t_j = t_{π(j)} T_w`.
fn strand_image(w: &[u8], j: usize) -> usize {
    let mut j = j;
    for &l in w.iter().rev() {
        if l > 0 {
            let i = l as usize;
            if j == i {
                j = i + 1;
            } else if j == i + 1 {
                j = i;
            }
        }
    }
    j
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Key {
    framing: SmallVec<[u8; 6]>,
    word: Word,
}

/// An element of `Y_{d,n}` as a combination of `t^a T_W` with `W` the
/// least reduced word of its class.
#[derive(Debug, Clone, PartialEq)]
pub struct WordElement {
    n: usize,
    d: u32,
    terms: BTreeMap<Key, Scalar>,
}

/// One letter of the oracle's input words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OLetter {
    Gen(u8),
    GenInv(u8),
    T(usize, u32),
}

fn oletter(l: Letter, n: usize, d: u32) -> Result<OLetter, OracleError> {
    let bad = || OracleError::Index(l.to_string(), n);
    Ok(match l {
        Letter::G(i) if i >= 1 && i < n => OLetter::Gen(i as u8),
        Letter::GInv(i) if i >= 1 && i < n => OLetter::GenInv(i as u8),
        Letter::B => OLetter::Gen(0),
        Letter::BInv => OLetter::GenInv(0),
        Letter::T(j, k) if j >= 1 && j <= n => OLetter::T(j, k.rem_euclid(d as i64) as u32),
        _ => return Err(bad()),
    })
}

fn add_term(terms: &mut BTreeMap<Key, Scalar>, k: Key, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&k) {
        Some(v) => {
            *v = v.add(&c);
            if v.is_zero() {
                terms.remove(&k);
            }
        }
        None => {
            terms.insert(k, c);
        }
    }
}

impl WordElement {
    fn zero(n: usize, d: u32) -> Self {
        WordElement { n, d, terms: BTreeMap::new() }
    }

    fn one(n: usize, d: u32) -> Self {
        let mut e = WordElement::zero(n, d);
        e.terms.insert(Key { framing: SmallVec::from_elem(0, n), word: Word::new() }, Scalar::one());
        e
    }

    /// `t^a T_W` for a reduced word `W`.
    fn monomial(n: usize, d: u32, framing: &[u8], w: &[u8], budget: &mut Budget) -> Result<Self, OracleError> {
        let class = braid_class(&w.iter().copied().collect(), budget)?;
        let mut e = WordElement::zero(n, d);
        e.terms.insert(Key { framing: framing.iter().copied().collect(), word: class[0].clone() }, Scalar::one());
        Ok(e)
    }

    fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (k, c) in &o.terms {
            add_term(&mut t, k.clone(), c.clone());
        }
        WordElement { n: self.n, d: self.d, terms: t }
    }

    fn scale(&self, s: &Scalar) -> Self {
        let mut t = BTreeMap::new();
        for (k, c) in &self.terms {
            add_term(&mut t, k.clone(), c.mul(s));
        }
        WordElement { n: self.n, d: self.d, terms: t }
    }

    fn mul_letter(&self, l: OLetter, budget: &mut Budget) -> Result<Self, OracleError> {
        let d = self.d;
        let mut out = BTreeMap::new();
        match l {
            OLetter::T(j, k) => {
                for (key, c) in &self.terms {
                    let mut f = key.framing.clone();
                    let p = strand_image(&key.word, j) - 1;
                    f[p] = ((f[p] as u32 + k) % d) as u8;
                    add_term(&mut out, Key { framing: f, word: key.word.clone() }, c.clone());
                }
            }
            OLetter::Gen(s) => {
                for (key, c) in &self.terms {
                    let mut longer = key.word.clone();
                    longer.push(s);
                    let class = braid_class(&longer, budget)?;
                    if class_is_reduced(&class) {
                        add_term(&mut out, Key { framing: key.framing.clone(), word: class[0].clone() }, c.clone());
                        continue;
                    }
                    // T_W g_s with W = W's: T_{W'} + (q − q^{-1}) T_{W'} ε_s g_s.
                    let own = braid_class(&key.word, budget)?;
                    let ending = own
                        .iter()
                        .find(|w| w.last() == Some(&s))
                        .ok_or_else(|| OracleError::Shape(format!("no word of {:?} ends in {}", key.word, s)))?;
                    let shorter: Word = ending[..ending.len() - 1].iter().copied().collect();
                    let shorter = braid_class(&shorter, budget)?.swap_remove(0);
                    add_term(&mut out, Key { framing: key.framing.clone(), word: shorter.clone() }, c.clone());
                    let q = if s == 0 { sc::dv() } else { sc::du() };
                    let cc = c.mul(&q).mul(&Scalar::frac(1, d as i64));
                    for sh in 0..d {
                        let mut f = key.framing.clone();
                        if s == 0 {
                            let p = strand_image(&shorter, 1) - 1;
                            f[p] = ((f[p] as u32 + sh) % d) as u8;
                        } else {
                            let p = strand_image(&shorter, s as usize) - 1;
                            let r = strand_image(&shorter, s as usize + 1) - 1;
                            f[p] = ((f[p] as u32 + sh) % d) as u8;
                            f[r] = ((f[r] as u32 + d - sh) % d) as u8;
                        }
                        add_term(&mut out, Key { framing: f, word: key.word.clone() }, cc.clone());
                    }
                }
            }
            OLetter::GenInv(s) => {
                // g^{-1} = g − (q − q^{-1}) ε_s.
                let g = self.mul_letter(OLetter::Gen(s), budget)?;
                let q = if s == 0 { sc::dv() } else { sc::du() };
                let mut eps = WordElement::zero(self.n, d);
                for sh in 0..d {
                    let mut e = self.mul_letter(OLetter::T(s.max(1) as usize, sh), budget)?;
                    if s > 0 {
                        e = e.mul_letter(OLetter::T(s as usize + 1, (d - sh) % d), budget)?;
                    }
                    eps = eps.add(&e);
                }
                return Ok(g.add(&eps.scale(&q.mul(&Scalar::frac(-1, d as i64)))));
            }
        }
        Ok(WordElement { n: self.n, d, terms: out })
    }

    fn mul(&self, o: &Self, budget: &mut Budget) -> Result<Self, OracleError> {
        let mut acc = WordElement::zero(self.n, self.d);
        for (key, c) in &o.terms {
            let mut e = self.clone();
            for (j, &a) in key.framing.iter().enumerate() {
                if a != 0 {
                    e = e.mul_letter(OLetter::T(j + 1, a as u32), budget)?;
                }
            }
            for &g in &key.word {
                e = e.mul_letter(OLetter::Gen(g), budget)?;
            }
            acc = acc.add(&e.scale(c));
        }
        Ok(acc)
    }

    fn from_letters(n: usize, d: u32, word: &[Letter], budget: &mut Budget) -> Result<Self, OracleError> {
        let mut e = WordElement::one(n, d);
        for &l in word {
            e = e.mul_letter(oletter(l, n, d)?, budget)?;
        }
        Ok(e)
    }

    /// Converts to the engine's representation by multiplying out each
    /// reduced word there.
    fn to_engine(&self) -> Result<AlgebraElement, OracleError> {
        let mut acc = AlgebraElement::zero(self.n, self.d);
        for (key, c) in &self.terms {
            let mut letters: Vec<Letter> = Vec::new();
            for (j, &a) in key.framing.iter().enumerate() {
                if a != 0 {
                    letters.push(Letter::T(j + 1, a as i64));
                }
            }
            letters.extend(key.word.iter().map(|&g| if g == 0 { Letter::B } else { Letter::G(g as usize) }));
            acc = acc.add(&AlgebraElement::from_word(self.n, self.d, &letters)?.scale(c));
        }
        Ok(acc)
    }
}

/// The middle factor of a top-strand split `p · κ · q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kappa {
    /// `t_m^k`.
    Frame(u8),
    /// `g_{m−1}`.
    Braid,
    /// `b_m t_m^k` with `b_m = g_{m−1} b_{m−1} g_{m−1}^{-1}`, `b_1 = b_1`.
    Loop(u8),
}

type Split = Vec<(Scalar, WordElement, Kappa, WordElement)>;

/// Writes an element of `Y_{d,m}` as `Σ c · p κ q` with `p, q ∈ Y_{d,m−1}`.
fn split_top(x: &WordElement, m: usize, budget: &mut Budget) -> Result<Split, OracleError> {
    let (n, d) = (x.n, x.d);
    let mut out: Split = Vec::new();
    let top = (m - 1) as u8;
    for (key, c) in &x.terms {
        if key.framing[m..].iter().any(|&a| a != 0) || key.word.iter().any(|&g| g as usize >= m) {
            return Err(OracleError::Shape(format!("term outside level {}", m)));
        }
        let am = key.framing[m - 1];
        let mut lower = key.framing.clone();
        lower[m - 1] = 0;
        if m == 1 {
            let kappa = if key.word.is_empty() { Kappa::Frame(am) } else { Kappa::Loop(am) };
            out.push((c.clone(), WordElement::one(n, d), kappa, WordElement::one(n, d)));
            continue;
        }
        let class = braid_class(&key.word, budget)?;
        let count = |w: &Word| w.iter().filter(|&&g| g == top).count();
        let best = class.iter().min_by_key(|w| (count(w), (*w).clone())).expect("nonempty class");
        let pos: Vec<usize> = best.iter().enumerate().filter(|(_, &g)| g == top).map(|(i, _)| i).collect();
        let frame = |j: usize, k: u8| {
            let mut f: SmallVec<[u8; 6]> = SmallVec::from_elem(0, n);
            f[j - 1] = k;
            f
        };
        match pos.len() {
            0 => {
                let p = WordElement::monomial(n, d, &lower, best, budget)?;
                out.push((c.clone(), p, Kappa::Frame(am), WordElement::one(n, d)));
            }
            1 => {
                let (a, cw) = (&best[..pos[0]], &best[pos[0] + 1..]);
                let p = WordElement::monomial(n, d, &lower, a, budget)?;
                let q = WordElement::monomial(n, d, &frame(m - 1, am), cw, budget)?;
                out.push((c.clone(), p, Kappa::Braid, q));
            }
            2 => {
                let (a, mid, cw) = (&best[..pos[0]], &best[pos[0] + 1..pos[1]], &best[pos[1] + 1..]);
                let pa = WordElement::monomial(n, d, &lower, a, budget)?;
                let qc = WordElement::monomial(n, d, &vec![0; n], cw, budget)?;
                let mid = WordElement::monomial(n, d, &frame(m - 1, am), mid, budget)?;
                // g M g = g M g^{-1} + (u − u^{-1}) g M e_{m−1}.
                let cc = c.mul(&sc::du()).mul(&Scalar::frac(1, d as i64));
                for s in 0..d as u8 {
                    let neg = ((d as u8) - s) % d as u8;
                    let p = pa.mul(&WordElement::monomial(n, d, &frame(m - 1, neg), &[], budget)?, budget)?;
                    let q = mid.mul(&WordElement::monomial(n, d, &frame(m - 1, s), &[], budget)?, budget)?.mul(&qc, budget)?;
                    out.push((cc.clone(), p, Kappa::Braid, q));
                }
                for (c2, p2, k2, q2) in split_top(&mid, m - 1, budget)? {
                    let cc = c.mul(&c2);
                    let p = pa.mul(&p2, budget)?;
                    let q = q2.mul(&qc, budget)?;
                    match k2 {
                        Kappa::Frame(k) => out.push((cc, p, Kappa::Frame(k), q)),
                        Kappa::Loop(k) => out.push((cc, p, Kappa::Loop(k), q)),
                        Kappa::Braid => {
                            // g_{m−1} g_{m−2} g_{m−1}^{-1} = g_{m−2}^{-1} g_{m−1} g_{m−2}.
                            let inner = (m - 2) as u8;
                            let p = p.mul_letter(OLetter::GenInv(inner), budget)?;
                            let q = WordElement::one(n, d).mul_letter(OLetter::Gen(inner), budget)?.mul(&q, budget)?;
                            out.push((cc, p, Kappa::Braid, q));
                        }
                    }
                }
            }
            k => return Err(OracleError::Shape(format!("{} top letters in a minimal word", k))),
        }
    }
    Ok(out)
}

fn trace_level(x: &WordElement, m: usize, p: &TraceParams, budget: &mut Budget) -> Result<Scalar, OracleError> {
    if m == 0 {
        return Ok(x.terms.values().fold(Scalar::zero(), |a, c| a.add(c)));
    }
    let mut acc = Scalar::zero();
    for (c, pe, kappa, qe) in split_top(x, m, budget)? {
        let value = match kappa {
            Kappa::Frame(k) => p.x[k as usize].clone(),
            Kappa::Braid => p.z.clone(),
            Kappa::Loop(k) => p.y[k as usize].clone(),
        };
        if value.is_zero() || c.is_zero() {
            continue;
        }
        let rest = trace_level(&qe.mul(&pe, budget)?, m - 1, p, budget)?;
        acc = acc.add(&c.mul(&value).mul(&rest));
    }
    Ok(acc)
}

/// Trace of a word computed by the oracle's own rewriting.
pub fn word_trace_oracle(word: &[Letter], n: usize, d: u32, params: &TraceParams) -> Result<Scalar, OracleError> {
    word_trace_oracle_with_budget(word, n, d, params, DEFAULT_BUDGET)
}

pub fn word_trace_oracle_with_budget(
    word: &[Letter],
    n: usize,
    d: u32,
    params: &TraceParams,
    budget: usize,
) -> Result<Scalar, OracleError> {
    if params.d != d {
        return Err(OracleError::Shape(format!("parameters have d = {} but the word has d = {}", params.d, d)));
    }
    let mut b = Budget::new(budget);
    let x = WordElement::from_letters(n, d, word, &mut b)?;
    Ok(trace_level(&x, n, params, &mut b)?.reduced())
}

/// Normal form of a word computed by the oracle, converted to the engine's
/// representation for comparison.
pub fn word_normal_form_oracle(word: &[Letter], n: usize, d: u32) -> Result<AlgebraElement, OracleError> {
    let mut b = Budget::new(DEFAULT_BUDGET);
    WordElement::from_letters(n, d, word, &mut b)?.to_engine()
}

/// Every reduced word of a signed permutation, found by braid moves from
/// one reduced word.
pub fn reduced_words(w: &SignedPermutation) -> Result<Vec<Word>, OracleError> {
    let start: Word = w.reduced_word().into_iter().map(|g| match g {
        crate::coxeterb::Gen::R => 0,
        crate::coxeterb::Gen::S(i) => i as u8,
    })
    .collect();
    braid_class(&start, &mut Budget::new(DEFAULT_BUDGET))
}

/// Products of basis monomials, filled on demand.
pub struct StructureTable {
    pub n: usize,
    pub d: u32,
    pub basis: Vec<BasisMonomial>,
    index: HashMap<BasisMonomial, usize>,
    table: HashMap<(usize, usize), AlgebraElement>,
}

impl StructureTable {
    pub fn new(n: usize, d: u32) -> Self {
        let basis = enumerate_basis(n, d);
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        StructureTable { n, d, basis, index, table: HashMap::new() }
    }

    pub fn element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::monomial(self.n, self.d, self.basis[i].clone(), Scalar::one())
    }

    /// `basis[i] · basis[j]`.
    pub fn product(&mut self, i: usize, j: usize) -> Result<AlgebraElement, AlgebraError> {
        if let Some(e) = self.table.get(&(i, j)) {
            return Ok(e.clone());
        }
        let e = self.element(i).mul(&self.element(j))?;
        self.table.insert((i, j), e.clone());
        Ok(e)
    }

    pub fn filled(&self) -> usize {
        self.table.len()
    }

    /// Whether every monomial of `e` is a basis element.
    pub fn closed(&self, e: &AlgebraElement) -> bool {
        e.terms().keys().all(|m| self.index.contains_key(m))
    }

    /// `x · basis[k]` through the table.
    fn right_times(&mut self, x: &AlgebraElement, k: usize) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = AlgebraElement::zero(self.n, self.d);
        for (m, c) in x.terms() {
            let i = self.index[m];
            acc = acc.add(&self.product(i, k)?.scale(c));
        }
        Ok(acc)
    }

    /// `basis[i] · x` through the table.
    fn left_times(&mut self, i: usize, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = AlgebraElement::zero(self.n, self.d);
        for (m, c) in x.terms() {
            let k = self.index[m];
            acc = acc.add(&self.product(i, k)?.scale(c));
        }
        Ok(acc)
    }

    /// `(b_i b_j) b_k = b_i (b_j b_k)`.
    pub fn associative(&mut self, i: usize, j: usize, k: usize) -> Result<bool, AlgebraError> {
        let ij = self.product(i, j)?;
        let jk = self.product(j, k)?;
        let left = self.right_times(&ij, k)?;
        let right = self.left_times(i, &jk)?;
        Ok(left.equals(&right))
    }

    /// `(b_i b_j) b_k = b_i (b_j b_k)` with only the pair products cached;
    /// keeps memory bounded on large bases.
    pub fn associative_uncached(&mut self, i: usize, j: usize, k: usize) -> Result<bool, AlgebraError> {
        let left = self.product(i, j)?.mul(&self.element(k))?;
        let right = self.element(i).mul(&self.product(j, k)?)?;
        Ok(left.equals(&right))
    }
}

/// Outcome of [`certify_algebra`].
#[derive(Debug, Clone, PartialEq)]
pub struct CertifyReport {
    pub n: usize,
    pub d: u32,
    pub basis_size: usize,
    pub triples: usize,
    pub exhaustive: bool,
    pub checks: Vec<(String, bool)>,
}

impl CertifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }
}

/// Bases up to this size get every associativity triple checked.
pub const EXHAUSTIVE_BASIS: usize = 32;
/// Triples sampled for larger bases.
pub const SAMPLED_TRIPLES: usize = 400;

/// Builds the structure table for `Y_{d,n}` and checks associativity, the
/// unit laws, the basis count `d^n 2^n n!`, closure, independence of the
/// reduced word used to lift a basis element, and the defining relations.
pub fn certify_algebra(n: usize, d: u32, seed: u64) -> Result<CertifyReport, OracleError> {
    let mut st = StructureTable::new(n, d);
    let size = st.basis.len();
    let expected = (d as usize).pow(n as u32) * (1usize << n) * (1..=n).product::<usize>();
    let mut checks = vec![(format!("basis count {} = d^n 2^n n! = {}", size, expected), size == expected)];

    let one = AlgebraElement::one(n, d);
    let mut unit = true;
    for i in 0..size {
        let b = st.element(i);
        unit &= one.mul(&b)?.equals(&b) && b.mul(&one)?.equals(&b);
    }
    checks.push(("unit laws".into(), unit));

    let exhaustive = size <= EXHAUSTIVE_BASIS;
    let triples: Vec<(usize, usize, usize)> = if exhaustive {
        (0..size).flat_map(|i| (0..size).flat_map(move |j| (0..size).map(move |k| (i, j, k)))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..SAMPLED_TRIPLES).map(|_| (rng.random_range(0..size), rng.random_range(0..size), rng.random_range(0..size))).collect()
    };
    let mut assoc = true;
    for &(i, j, k) in &triples {
        let ok = if exhaustive { st.associative(i, j, k)? } else { st.associative_uncached(i, j, k)? };
        if !ok {
            assoc = false;
            break;
        }
    }
    checks.push((format!("associativity on {} triples", triples.len()), assoc));
    let closed = st.table.values().all(|e| st.closed(e));
    checks.push((format!("closure of {} table products", st.filled()), closed));

    let mut lifts = true;
    for w in SignedPermutation::all(n) {
        let target = AlgebraElement::monomial(n, d, BasisMonomial::new(&vec![0; n], w.clone()), Scalar::one());
        for word in reduced_words(&w)? {
            let letters: Vec<Letter> = word.iter().map(|&g| if g == 0 { Letter::B } else { Letter::G(g as usize) }).collect();
            lifts &= AlgebraElement::from_word(n, d, &letters)?.equals(&target);
        }
    }
    checks.push(("every reduced word lifts to its basis element".into(), lifts));

    for (name, ok) in relation_checks(n, d)? {
        checks.push((name, ok));
    }
    Ok(CertifyReport { n, d, basis_size: size, triples: triples.len(), exhaustive, checks })
}

fn relation_checks(n: usize, d: u32) -> Result<Vec<(String, bool)>, OracleError> {
    use Letter::*;
    let w = |l: &[Letter]| AlgebraElement::from_word(n, d, l);
    let mut out = Vec::new();
    let mut push = |name: String, a: AlgebraElement, b: AlgebraElement| out.push((name, a.equals(&b)));
    for j in 1..=n {
        push(format!("t{}^{} = 1", j, d), w(&vec![T(j, 1); d as usize])?, w(&[])?);
        push(format!("b t{} = t{} b", j, j), w(&[B, T(j, 1)])?, w(&[T(j, 1), B])?);
        for k in 1..=n {
            push(format!("t{} t{} = t{} t{}", j, k, k, j), w(&[T(j, 1), T(k, 1)])?, w(&[T(k, 1), T(j, 1)])?);
        }
    }
    for i in 1..n {
        for j in 1..=n {
            let sj = if j == i { i + 1 } else if j == i + 1 { i } else { j };
            push(format!("g{} t{} = t{} g{}", i, j, sj, i), w(&[G(i), T(j, 1)])?, w(&[T(sj, 1), G(i)])?);
        }
        let e = crate::ybalgebra::idempotent_e(i, i + 1, 0, n, d)?;
        let g = w(&[G(i)])?;
        push(format!("g{}^2 = 1 + (u - u^-1) e{} g{}", i, i, i), w(&[G(i), G(i)])?, w(&[])?.add(&e.mul(&g)?.scale(&sc::du())));
        push(format!("g{} g{}^-1 = 1", i, i), w(&[G(i), GInv(i)])?, w(&[])?);
        for k in i + 1..n {
            let (a, b) = if k == i + 1 {
                (w(&[G(i), G(k), G(i)])?, w(&[G(k), G(i), G(k)])?)
            } else {
                (w(&[G(i), G(k)])?, w(&[G(k), G(i)])?)
            };
            push(format!("braid relation g{} g{}", i, k), a, b);
        }
        if i >= 2 {
            push(format!("b g{} = g{} b", i, i), w(&[B, G(i)])?, w(&[G(i), B])?);
        }
    }
    if n >= 2 {
        push("b g1 b g1 = g1 b g1 b".into(), w(&[B, G(1), B, G(1)])?, w(&[G(1), B, G(1), B])?);
    }
    let f = crate::ybalgebra::idempotent_f(1, 0, n, d)?;
    let b = w(&[B])?;
    push("b^2 = 1 + (v - v^-1) f b".into(), w(&[B, B])?, w(&[])?.add(&f.mul(&b)?.scale(&sc::dv())));
    push("b b^-1 = 1".into(), w(&[B, BInv])?, w(&[])?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markov::trace_of_word;
    use Letter::*;

    #[test]
    fn bfs_lengths() {
        let b2 = bfs_coxeter(2);
        assert_eq!(b2.len(), 8);
        assert_eq!(b2.values().max(), Some(&4));
        let b3 = bfs_coxeter(3);
        assert_eq!(b3.len(), 48);
        assert_eq!(b3[&SignedPermutation::identity(3)], 0);
        for (w, l) in &b3 {
            assert_eq!(w.length(), *l, "{}", w);
        }
    }

    #[test]
    fn braid_classes() {
        let mut b = Budget::new(DEFAULT_BUDGET);
        let w0: Word = [0, 1, 0, 1].into_iter().collect();
        let c = braid_class(&w0, &mut b).unwrap();
        assert_eq!(c.len(), 2);
        assert!(class_is_reduced(&c));
        let bad: Word = [1, 0, 1, 0, 1].into_iter().collect();
        assert!(!class_is_reduced(&braid_class(&bad, &mut b).unwrap()));
    }

    #[test]
    fn normal_forms_agree() {
        let words: Vec<(usize, u32, Vec<Letter>)> = vec![
            (2, 1, vec![G(1), B, G(1), B, G(1)]),
            (2, 2, vec![T(1, 1), G(1), T(1, 1), B, GInv(1)]),
            (3, 2, vec![G(2), G(1), B, G(1), G(2), BInv, G(1)]),
            (3, 3, vec![T(3, 2), G(1), G(2), G(1), T(1, 1), G(2)]),
        ];
        for (n, d, w) in words {
            let e = AlgebraElement::from_word(n, d, &w).unwrap();
            assert!(word_normal_form_oracle(&w, n, d).unwrap().equals(&e));
        }
    }

    #[test]
    fn trace_examples() {
        let p = TraceParams::symbolic(1);
        assert!(word_trace_oracle(&[G(1)], 2, 1, &p).unwrap().equals(&sc::z()));
        for (n, d, w) in [
            (2, 1, vec![B, G(1), B, G(1)]),
            (2, 2, vec![T(1, 1), G(1), T(1, 1)]),
            (3, 2, vec![G(2), G(1), B, GInv(1), GInv(2), T(3, 1)]),
            (3, 3, vec![B, G(1), B, G(2), G(1), B, G(1), G(2), T(2, 2)]),
        ] {
            let p = TraceParams::symbolic(d);
            let a = word_trace_oracle(&w, n, d, &p).unwrap();
            let b = trace_of_word(&w, n, d, &p).unwrap();
            assert!(a.equals(&b), "{:?}: {} vs {}", w, a, b);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let w = vec![G(1), B, G(1), B, G(2), G(1), B];
        let r = word_trace_oracle_with_budget(&w, 3, 1, &TraceParams::symbolic(1), 3);
        assert_eq!(r, Err(OracleError::Budget(3)));
    }

    #[test]
    fn certify_small() {
        let r = certify_algebra(2, 1, 0).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        assert_eq!(r.basis_size, 8);
        assert!(r.exhaustive);
    }
}
