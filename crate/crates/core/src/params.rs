//! Evaluation data: the numerator polynomials, the denominator `q`, their
//! power-series coefficients and the handle relation.

use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{MoebiusError, Result};
use crate::rational::{parse_q, q_to_string, Q};

/// Polynomial over the rationals, coefficients ascending, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<Q>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        PolyQ::new(vec![c])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        PolyQ::new(cs.iter().map(|&c| crate::rational::q_int(c)).collect())
    }

    /// `1 - T^r`
    pub fn one_minus_t_pow(r: usize) -> Self {
        let mut c = vec![Q::zero(); r + 1];
        c[0] = Q::one();
        c[r] -= Q::one();
        PolyQ::new(c)
    }

    pub fn parse_coeffs<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let cs = items.iter().map(|s| parse_q(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Ok(PolyQ::new(cs))
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(q_to_string).collect()
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})T")?,
                _ => write!(f, "({c})T^{i}")?,
            }
        }
        Ok(())
    }
}

/// Which of the three evaluation series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    Alpha,
    Beta,
    Gamma,
}

impl SeriesKind {
    /// Möbius-dot count 0, 1, 2 selects alpha, beta, gamma.
    pub fn from_mob(mob: usize) -> SeriesKind {
        match mob {
            0 => SeriesKind::Alpha,
            1 => SeriesKind::Beta,
            2 => SeriesKind::Gamma,
            _ => panic!("mob {mob} is not normalized"),
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

/// Validated evaluation parameters with a lazily grown series cache.
#[derive(Debug)]
pub struct ParamSet {
    p: [PolyQ; 3],
    q: PolyQ,
    n_deg: usize,
    m_deg: usize,
    k: usize,
    handle_coeffs: Vec<Q>,
    cache: RwLock<[Vec<Q>; 3]>,
}

impl Clone for ParamSet {
    fn clone(&self) -> Self {
        let cache = self.cache.read().expect("series cache poisoned").clone();
        ParamSet {
            p: self.p.clone(),
            q: self.q.clone(),
            n_deg: self.n_deg,
            m_deg: self.m_deg,
            k: self.k,
            handle_coeffs: self.handle_coeffs.clone(),
            cache: RwLock::new(cache),
        }
    }
}

impl PartialEq for ParamSet {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q
    }
}

impl ParamSet {
    pub fn p_alpha(&self) -> &PolyQ {
        &self.p[0]
    }
    pub fn p_beta(&self) -> &PolyQ {
        &self.p[1]
    }
    pub fn p_gamma(&self) -> &PolyQ {
        &self.p[2]
    }
    pub fn q(&self) -> &PolyQ {
        &self.q
    }
    /// Degree of `p_alpha`.
    pub fn n_deg(&self) -> usize {
        self.n_deg
    }
    /// Degree of `q`.
    pub fn m_deg(&self) -> usize {
        self.m_deg
    }
    /// Number of distinct handle powers, `max(N + 1, M)`.
    pub fn k(&self) -> usize {
        self.k
    }
    /// `a_1, ..., a_M` where `q = 1 - a_1 T + a_2 T^2 - ...`.
    pub fn handle_coeffs(&self) -> &[Q] {
        &self.handle_coeffs
    }

    /// Constant numerators over `q = 1 - T`.
    pub fn constant(alpha0: Q, beta0: Q, gamma0: Q) -> Result<ParamSet> {
        validate_params(
            PolyQ::constant(alpha0),
            PolyQ::constant(beta0),
            PolyQ::constant(gamma0),
            PolyQ::one_minus_t_pow(1),
        )
    }

    /// `Some(r)` when `q = 1 - T^r`.
    pub fn monomial_r(&self) -> Option<usize> {
        let r = self.m_deg;
        (r >= 1 && self.q == PolyQ::one_minus_t_pow(r)).then_some(r)
    }

    /// `(alpha0, beta0, gamma0)` when the parameters have constant numerators over `1 - T`.
    pub fn constant_values(&self) -> Option<(Q, Q, Q)> {
        let constant = self.p.iter().all(|p| p.degree().unwrap_or(0) == 0);
        (constant && self.monomial_r() == Some(1)).then(|| (self.p[0].coeff(0), self.p[1].coeff(0), self.p[2].coeff(0)))
    }

    /// k-th Taylor coefficient of `p_kind / q`.
    pub fn series_coeff(&self, kind: SeriesKind, k: usize) -> Q {
        let slot = kind.slot();
        {
            let cache = self.cache.read().expect("series cache poisoned");
            if let Some(v) = cache[slot].get(k) {
                return v.clone();
            }
        }
        let mut cache = self.cache.write().expect("series cache poisoned");
        let seq = &mut cache[slot];
        while seq.len() <= k {
            let j = seq.len();
            let mut z = self.p[slot].coeff(j);
            for i in 1..=self.m_deg.min(j) {
                let qi = self.q.coeff(i);
                if !qi.is_zero() {
                    z -= qi * &seq[j - i];
                }
            }
            seq.push(z);
        }
        seq[k].clone()
    }

    /// Writes `h^e` as a combination of `h^0, ..., h^{K-1}` using the handle relation.
    pub fn handle_reduction(&self, e: usize) -> Vec<Q> {
        let k = self.k;
        let mut v = vec![Q::zero(); e.max(k - 1) + 1];
        v[e] = Q::one();
        for i in (k..=e).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for j in 1..=self.m_deg {
                let qj = self.q.coeff(j);
                if !qj.is_zero() {
                    v[i - j] -= &c * qj;
                }
            }
        }
        v.truncate(k);
        v
    }

    pub fn to_file(&self) -> ParamFile {
        ParamFile {
            p_alpha: self.p[0].to_strings(),
            p_beta: self.p[1].to_strings(),
            p_gamma: self.p[2].to_strings(),
            q: self.q.to_strings(),
        }
    }
}

/// Checks the degree conditions and builds a [`ParamSet`].
pub fn validate_params(p_alpha: PolyQ, p_beta: PolyQ, p_gamma: PolyQ, q: PolyQ) -> Result<ParamSet> {
    if q.coeff(0) != Q::one() {
        return Err(MoebiusError::InvalidParams(format!("q(0) must be 1, got {}", q.coeff(0))));
    }
    // A vanishing p_alpha leaves N undefined; refuse rather than guess.
    let n_deg = p_alpha.degree().ok_or_else(|| MoebiusError::InvalidParams("p_alpha must be nonzero".into()))?;
    let m_deg = q.degree().unwrap_or(0);
    let k = (n_deg + 1).max(m_deg);
    for (name, p) in [("p_beta", &p_beta), ("p_gamma", &p_gamma)] {
        if let Some(d) = p.degree() {
            if d >= k {
                return Err(MoebiusError::InvalidParams(format!("deg {name} = {d} must be < K = {k}")));
            }
        }
    }
    let handle_coeffs = (1..=m_deg).map(|i| if i % 2 == 1 { -q.coeff(i) } else { q.coeff(i) }).collect();
    Ok(ParamSet {
        p: [p_alpha, p_beta, p_gamma],
        q,
        n_deg,
        m_deg,
        k,
        handle_coeffs,
        cache: RwLock::new([Vec::new(), Vec::new(), Vec::new()]),
    })
}

pub fn series_coeff(ps: &ParamSet, kind: SeriesKind, k: usize) -> Q {
    ps.series_coeff(kind, k)
}

/// On-disk form: rational strings indexed by degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamFile {
    pub p_alpha: Vec<String>,
    #[serde(default)]
    pub p_beta: Vec<String>,
    #[serde(default)]
    pub p_gamma: Vec<String>,
    pub q: Vec<String>,
}

impl ParamFile {
    pub fn into_params(&self) -> Result<ParamSet> {
        validate_params(
            PolyQ::parse_coeffs(&self.p_alpha)?,
            PolyQ::parse_coeffs(&self.p_beta)?,
            PolyQ::parse_coeffs(&self.p_gamma)?,
            PolyQ::parse_coeffs(&self.q)?,
        )
    }
}

/// Parameters of the sandwiched monoid: `a^K = a^{K-r}` with `r` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonoidParams {
    k: usize,
    r: usize,
}

impl MonoidParams {
    pub fn new(k: usize, r: usize) -> Result<MonoidParams> {
        if r == 0 || r % 2 == 0 {
            return Err(MoebiusError::InvalidParams(format!("r = {r} must be odd and positive")));
        }
        if k < r {
            return Err(MoebiusError::InvalidParams(format!("K = {k} must be at least r = {r}")));
        }
        Ok(MonoidParams { k, r })
    }

    /// Monoid parameters matching `q = 1 - T^r`.
    pub fn from_params(ps: &ParamSet) -> Result<MonoidParams> {
        let r = ps
            .monomial_r()
            .ok_or_else(|| MoebiusError::Precondition(format!("q = {} is not of the form 1 - T^r", ps.q())))?;
        MonoidParams::new(ps.k(), r)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// With `K = r` the generator `a` is invertible.
    pub fn is_degenerate(&self) -> bool {
        self.k == self.r
    }

    pub fn reduce(&self, h: usize) -> usize {
        handle_reduce_monoid(h, *self)
    }
}

/// Replaces `h >= K` by `h - r` until it drops below `K`.
pub fn handle_reduce_monoid(h: usize, mp: MonoidParams) -> usize {
    if h < mp.k {
        h
    } else {
        let base = mp.k - mp.r;
        base + (h - base) % mp.r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q_frac, q_int};

    fn ints(v: &[i64]) -> PolyQ {
        PolyQ::from_ints(v)
    }

    #[test]
    fn poly_trims_trailing_zeros() {
        assert_eq!(ints(&[1, 0, 0]).coeffs().len(), 1);
        assert!(ints(&[0, 0]).is_zero());
        assert_eq!(ints(&[0, 0]).degree(), None);
        assert_eq!(ints(&[1, 2, 3]).degree(), Some(2));
    }

    #[test]
    fn constant_shape() {
        let ps = validate_params(ints(&[2]), ints(&[1]), ints(&[1]), ints(&[1, -1])).unwrap();
        assert_eq!(ps.k(), 1);
        assert_eq!(ps.handle_coeffs(), &[q_int(1)]);
        for k in 0..=10 {
            assert_eq!(ps.series_coeff(SeriesKind::Alpha, k), q_int(2));
        }
    }

    #[test]
    fn root_of_unity_relation() {
        let ps = validate_params(ints(&[1]), PolyQ::zero(), PolyQ::zero(), PolyQ::one_minus_t_pow(5)).unwrap();
        assert_eq!(ps.k(), 5);
        assert_eq!(ps.handle_reduction(5), vec![q_int(1), q_int(0), q_int(0), q_int(0), q_int(0)]);
        assert_eq!(ps.monomial_r(), Some(5));
    }

    #[test]
    fn degree_bound_rejected() {
        let err = validate_params(ints(&[1]), ints(&[0, 1]), PolyQ::zero(), ints(&[1, -1])).unwrap_err();
        assert!(matches!(err, MoebiusError::InvalidParams(_)));
    }

    #[test]
    fn bad_constant_term_and_zero_alpha_rejected() {
        assert!(validate_params(ints(&[1]), PolyQ::zero(), PolyQ::zero(), ints(&[2, -1])).is_err());
        assert!(validate_params(ints(&[1]), PolyQ::zero(), PolyQ::zero(), PolyQ::zero()).is_err());
        assert!(validate_params(PolyQ::zero(), PolyQ::zero(), PolyQ::zero(), ints(&[1, -1])).is_err());
    }

    #[test]
    fn long_division_by_one_minus_t_cubed() {
        let ps = validate_params(ints(&[1]), PolyQ::zero(), PolyQ::zero(), PolyQ::one_minus_t_pow(3)).unwrap();
        let got: Vec<Q> = (0..7).map(|k| ps.series_coeff(SeriesKind::Alpha, k)).collect();
        assert_eq!(got, [1, 0, 0, 1, 0, 0, 1].map(q_int).to_vec());
    }

    #[test]
    fn series_starts_with_constant_term() {
        let ps = validate_params(ints(&[7, 3]), ints(&[5]), PolyQ::zero(), ints(&[1, 1, 1])).unwrap();
        assert_eq!(ps.series_coeff(SeriesKind::Alpha, 0), q_int(7));
        assert_eq!(ps.series_coeff(SeriesKind::Beta, 0), q_int(5));
        assert_eq!(ps.series_coeff(SeriesKind::Gamma, 4), q_int(0));
    }

    #[test]
    fn cache_independent() {
        let mk = || validate_params(ints(&[3, -1]), ints(&[1]), ints(&[0, 2]), ints(&[1, -2, 1])).unwrap();
        let direct = mk().series_coeff(SeriesKind::Gamma, 10);
        let seq = mk();
        let mut last = q_int(0);
        for k in 0..=10 {
            last = seq.series_coeff(SeriesKind::Gamma, k);
        }
        assert_eq!(direct, last);
    }

    #[test]
    fn handle_reduce_examples() {
        assert_eq!(handle_reduce_monoid(5, MonoidParams::new(5, 5).unwrap()), 0);
        assert_eq!(handle_reduce_monoid(7, MonoidParams::new(4, 3).unwrap()), 1);
        assert_eq!(handle_reduce_monoid(2, MonoidParams::new(4, 3).unwrap()), 2);
    }

    #[test]
    fn monoid_params_validation() {
        assert!(MonoidParams::new(4, 2).is_err());
        assert!(MonoidParams::new(2, 3).is_err());
        assert!(MonoidParams::new(1, 1).unwrap().is_degenerate());
        assert!(!MonoidParams::new(4, 3).unwrap().is_degenerate());
    }

    #[test]
    fn param_file_round_trip() {
        let f = ParamFile {
            p_alpha: vec!["2".into()],
            p_beta: vec!["1/2".into()],
            p_gamma: vec!["1".into()],
            q: vec!["1".into(), "-1".into()],
        };
        let ps = f.into_params().unwrap();
        assert_eq!(ps.series_coeff(SeriesKind::Beta, 3), q_frac(1, 2));
        assert_eq!(ps.to_file(), f);
        assert_eq!(ps.constant_values(), Some((q_int(2), q_frac(1, 2), q_int(1))));
    }

    fn recurrence_holds(ps: &ParamSet, kind: SeriesKind, k: usize) -> bool {
        // z_k = a_1 z_{k-1} - a_2 z_{k-2} + ...
        let mut rhs = Q::zero();
        for (i, a) in ps.handle_coeffs().iter().enumerate() {
            let i = i + 1;
            let term = a * ps.series_coeff(kind, k - i);
            if i % 2 == 1 {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        rhs == ps.series_coeff(kind, k)
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
            prop::collection::vec(-4i64..=4, 0..=max_len)
        }

        proptest! {
            #[test]
            fn series_satisfies_handle_recurrence(
                pa in poly(3), pb in poly(3), pg in poly(3), qt in poly(3), lead in 1i64..=3
            ) {
                let mut pa = pa;
                pa.push(lead);
                let mut qv = vec![1];
                qv.extend(qt);
                let res = validate_params(ints(&pa), ints(&pb), ints(&pg), ints(&qv));
                prop_assume!(res.is_ok());
                let ps = res.unwrap();
                for kind in [SeriesKind::Alpha, SeriesKind::Beta, SeriesKind::Gamma] {
                    for k in ps.k()..ps.k() + 6 {
                        prop_assert!(recurrence_holds(&ps, kind, k));
                    }
                }
            }

            #[test]
            fn monoid_reduction_is_canonical(k in 1usize..9, r_half in 0usize..4, h in 0usize..40) {
                let r = 2 * r_half + 1;
                prop_assume!(r <= k);
                let mp = MonoidParams::new(k, r).unwrap();
                let red = handle_reduce_monoid(h, mp);
                prop_assert!(red < k);
                prop_assert_eq!(red % r, h % r);
                if h >= k - r {
                    prop_assert!(red >= k - r);
                } else {
                    prop_assert_eq!(red, h);
                }
            }
        }
    }
}
