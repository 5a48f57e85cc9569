//! The hyperoctahedral group W_n as signed permutations in window notation.

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("strand counts differ: {0} vs {1}")]
    Mismatch(usize, usize),
    #[error("not a signed permutation: {0}")]
    Invalid(String),
    #[error("generator index {0} out of range for n = {1}")]
    Index(usize, usize),
}

/// A Coxeter generator of W_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    /// `s_i` swapping positions `i` and `i+1` (1-based).
    S(usize),
    /// `r_1` negating position 1.
    R,
}

/// A signed permutation; `window[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: SmallVec<[i8; 6]>,
}

/// Element of N_k: `(p = k, unsigned) ↦ 1`, `(p = k, signed) ↦ r_k`,
/// `(p < k, unsigned) ↦ s_{k-1}⋯s_p`, `(p < k, signed) ↦ s_{k-1}⋯s_p r_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NkFactor {
    pub k: usize,
    pub p: usize,
    pub signed: bool,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { window: (1..=n as i8).collect() }
    }

    /// Validates a window.
    pub fn from_window(w: &[i32]) -> Result<Self, CoxeterError> {
        let n = w.len();
        let mut seen = vec![false; n + 1];
        for &x in w {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(CoxeterError::Invalid(format!("{:?}", w)));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window: w.iter().map(|&x| x as i8).collect() })
    }

    pub fn generator(n: usize, g: Gen) -> Result<Self, CoxeterError> {
        let mut w = Self::identity(n);
        match g {
            Gen::S(i) if i >= 1 && i < n => w.window.swap(i - 1, i),
            Gen::R if n >= 1 => w.window[0] = -1,
            Gen::S(i) => return Err(CoxeterError::Index(i, n)),
            Gen::R => return Err(CoxeterError::Index(1, n)),
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> Vec<i32> {
        self.window.iter().map(|&x| x as i32).collect()
    }

    /// `w(i)` for `i` in `±1..=±n`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1] as i32;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `(self ∘ o)(i) = self(o(i))`.
    pub fn compose(&self, o: &Self) -> Result<Self, CoxeterError> {
        if self.n() != o.n() {
            return Err(CoxeterError::Mismatch(self.n(), o.n()));
        }
        Ok(SignedPermutation { window: o.window.iter().map(|&j| self.apply(j as i32) as i8).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut w: SmallVec<[i8; 6]> = SmallVec::from_elem(0, self.n());
        for (i, &x) in self.window.iter().enumerate() {
            let a = x.unsigned_abs() as usize - 1;
            w[a] = if x < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
        }
        SignedPermutation { window: w }
    }

    /// Right multiplication by a generator.
    pub fn mul_gen(&self, g: Gen) -> Self {
        let mut w = self.clone();
        match g {
            Gen::S(i) => w.window.swap(i - 1, i),
            Gen::R => w.window[0] = -w.window[0],
        }
        w
    }

    /// Left multiplication by a generator.
    pub fn gen_mul(&self, g: Gen) -> Self {
        let mut w = self.clone();
        for x in w.window.iter_mut() {
            match g {
                Gen::S(i) => {
                    let a = x.unsigned_abs() as usize;
                    if a == i || a == i + 1 {
                        let b = (2 * i + 1 - a) as i8;
                        *x = if *x < 0 { -b } else { b };
                    }
                }
                Gen::R => {
                    if x.unsigned_abs() == 1 {
                        *x = -*x;
                    }
                }
            }
        }
        w
    }

    pub fn inversions(&self) -> usize {
        let w = &self.window;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn negatives(&self) -> usize {
        self.window.iter().filter(|&&x| x < 0).count()
    }

    /// `#{i < j : w(i) + w(j) < 0}`.
    pub fn negative_sum_pairs(&self) -> usize {
        let w = &self.window;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if (w[i] as i32) + (w[j] as i32) < 0 {
                    c += 1;
                }
            }
        }
        c
    }

    /// Coxeter length `inv + neg + nsp`.
    pub fn length(&self) -> usize {
        self.inversions() + self.negatives() + self.negative_sum_pairs()
    }

    pub fn right_descent(&self, g: Gen) -> bool {
        match g {
            Gen::S(i) => self.window[i - 1] > self.window[i],
            Gen::R => self.window[0] < 0,
        }
    }

    /// Any right descent, preferring the smallest `s_i`, then `r_1`.
    pub fn some_descent(&self) -> Option<Gen> {
        (1..self.n()).map(Gen::S).chain(std::iter::once(Gen::R)).find(|&g| self.right_descent(g))
    }

    /// A reduced word, read left to right.
    pub fn reduced_word(&self) -> Vec<Gen> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(g) = w.some_descent() {
            word.push(g);
            w = w.mul_gen(g);
        }
        word.reverse();
        word
    }

    /// Splits off the N_n factor: `self = rest · lift(factor)` with `rest`
    /// fixing `n`.
    pub fn top_factor(&self) -> (NkFactor, SignedPermutation) {
        let n = self.n();
        let pos = self.window.iter().position(|x| x.unsigned_abs() as usize == n).expect("valid window");
        let factor = NkFactor { k: n, p: pos + 1, signed: self.window[pos] < 0 };
        let mut rest = self.clone();
        if factor.signed {
            rest.window[pos] = -rest.window[pos];
        }
        let v = rest.window.remove(pos);
        rest.window.push(v);
        (factor, rest)
    }

    /// Restriction of an element fixing `n` to W_{n-1}.
    pub fn restrict(&self) -> SignedPermutation {
        debug_assert_eq!(self.window.last().copied(), Some(self.n() as i8));
        let mut w = self.clone();
        w.window.pop();
        w
    }

    /// Embedding into W_{n+1}.
    pub fn extend(&self) -> SignedPermutation {
        let mut w = self.clone();
        w.window.push(self.n() as i8 + 1);
        w
    }

    /// All elements of W_n in a fixed order (sign patterns within
    /// lexicographic permutations).
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut perms: Vec<Vec<i8>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for v in 1..=n as i8 {
                    if !p.contains(&v) {
                        let mut q = p.clone();
                        q.push(v);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0..(1u32 << n) {
                let w = p.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect();
                out.push(SignedPermutation { window: w });
            }
        }
        out
    }
}

impl NkFactor {
    /// The element of W_k this factor names, as a reduced word.
    pub fn word(&self) -> Vec<Gen> {
        let mut w: Vec<Gen> = (self.p..self.k).rev().map(Gen::S).collect();
        if self.signed {
            w.extend(r_word(self.p));
        }
        w
    }

    pub fn lift(&self) -> SignedPermutation {
        let mut w = SignedPermutation::identity(self.k);
        for g in self.word() {
            w = w.mul_gen(g);
        }
        w
    }

    pub fn length(&self) -> usize {
        (self.k - self.p) + if self.signed { 2 * self.p - 1 } else { 0 }
    }
}

/// Reduced word of `r_p = s_{p-1}⋯s_1 r_1 s_1⋯s_{p-1}`.
pub fn r_word(p: usize) -> Vec<Gen> {
    let mut w: Vec<Gen> = (1..p).rev().map(Gen::S).collect();
    w.push(Gen::R);
    w.extend((1..p).map(Gen::S));
    w
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, CoxeterError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| CoxeterError::Invalid(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(SignedPermutation::identity(0));
        }
        let w: Result<Vec<i32>, _> = inner.split(',').map(|x| x.trim().parse::<i32>()).collect();
        SignedPermutation::from_window(&w.map_err(|_| CoxeterError::Invalid(s.to_string()))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn bfs(n: usize) -> HashMap<SignedPermutation, usize> {
        let gens: Vec<Gen> = (1..n).map(Gen::S).chain([Gen::R]).collect();
        let mut dist = HashMap::new();
        let e = SignedPermutation::identity(n);
        dist.insert(e.clone(), 0);
        let mut frontier = vec![e];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in frontier {
                let d = dist[&w];
                for &g in &gens {
                    let x = w.mul_gen(g);
                    if !dist.contains_key(&x) {
                        dist.insert(x.clone(), d + 1);
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    fn w(v: &[i32]) -> SignedPermutation {
        SignedPermutation::from_window(v).unwrap()
    }

    #[test]
    fn compose_examples() {
        let e = SignedPermutation::identity(2);
        let s1 = SignedPermutation::generator(2, Gen::S(1)).unwrap();
        let r1 = SignedPermutation::generator(2, Gen::R).unwrap();
        assert_eq!(e.compose(&s1).unwrap(), s1);
        assert!(s1.compose(&s1).unwrap().is_identity());
        let a = r1.compose(&s1).unwrap().compose(&r1).unwrap().compose(&s1).unwrap();
        let b = s1.compose(&r1).unwrap().compose(&s1).unwrap().compose(&r1).unwrap();
        assert_eq!(a, b);
        assert!(e.compose(&SignedPermutation::identity(3)).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(SignedPermutation::identity(3).length(), 0);
        assert_eq!(w(&[-1, 2]).length(), 1);
        assert_eq!(w(&[-2, -1]).length(), 3);
        assert_eq!(w(&[-1, -2]).length(), 4);
    }

    #[test]
    fn length_matches_bfs() {
        for n in 1..=3 {
            let d = bfs(n);
            assert_eq!(d.len(), (1usize << n) * (1..=n).product::<usize>());
            for (x, l) in &d {
                assert_eq!(x.length(), *l, "{}", x);
            }
        }
        let d2 = bfs(2);
        assert_eq!(d2.len(), 8);
        assert_eq!(d2.values().max(), Some(&4));
        assert_eq!(d2[&w(&[-1, -2])], 4);
    }

    #[test]
    fn descents_match_length() {
        for n in 1..=4 {
            for x in SignedPermutation::all(n) {
                for g in (1..n).map(Gen::S).chain([Gen::R]) {
                    let y = x.mul_gen(g);
                    assert_eq!(x.right_descent(g), y.length() + 1 == x.length(), "{} {:?}", x, g);
                }
            }
        }
        assert!(!SignedPermutation::identity(2).right_descent(Gen::S(1)));
        assert!(w(&[-1, 2]).right_descent(Gen::R));
        assert!(w(&[2, -1]).right_descent(Gen::S(1)));
    }

    #[test]
    fn left_multiplication() {
        for n in 1..=3 {
            for x in SignedPermutation::all(n) {
                for g in (1..n).map(Gen::S).chain([Gen::R]) {
                    let s = SignedPermutation::generator(n, g).unwrap();
                    assert_eq!(x.gen_mul(g), s.compose(&x).unwrap());
                    assert_eq!(x.mul_gen(g), x.compose(&s).unwrap());
                }
            }
        }
    }

    #[test]
    fn top_factor_examples() {
        let (f, rest) = SignedPermutation::identity(3).top_factor();
        assert_eq!(f, NkFactor { k: 3, p: 3, signed: false });
        assert!(rest.is_identity());
        let x = w(&[2, -1]);
        let (f, rest) = x.top_factor();
        assert_eq!(f, NkFactor { k: 2, p: 1, signed: false });
        assert_eq!(rest, w(&[-1, 2]));
        assert_eq!(rest.compose(&f.lift()).unwrap(), x);
        let x = w(&[-2, 1]);
        let (f, rest) = x.top_factor();
        assert_eq!(f, NkFactor { k: 2, p: 1, signed: true });
        assert!(rest.is_identity());
        assert_eq!(f.lift(), x);
    }

    #[test]
    fn top_factor_exhaustive() {
        for n in 1..=4 {
            let all = SignedPermutation::all(n);
            let mut seen = std::collections::HashSet::new();
            for x in &all {
                let (f, rest) = x.top_factor();
                assert_eq!(rest.window.last().copied(), Some(n as i8));
                assert_eq!(rest.compose(&f.lift()).unwrap(), *x);
                assert_eq!(x.length(), rest.length() + f.length());
                assert_eq!(f.lift().length(), f.length());
                seen.insert((rest.restrict(), f.p, f.signed));
            }
            assert_eq!(seen.len(), all.len());
        }
    }

    #[test]
    fn reduced_words_are_reduced() {
        for x in SignedPermutation::all(3) {
            let word = x.reduced_word();
            assert_eq!(word.len(), x.length());
            let mut y = SignedPermutation::identity(3);
            for g in word {
                y = y.mul_gen(g);
            }
            assert_eq!(y, x);
        }
    }

    #[test]
    fn window_text_round_trip() {
        let x: SignedPermutation = "[2,-1,3]".parse().unwrap();
        assert_eq!(x.to_string(), "[2,-1,3]");
        assert!("[2,2]".parse::<SignedPermutation>().is_err());
    }
}
