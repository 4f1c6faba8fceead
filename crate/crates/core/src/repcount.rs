//! Counting: partition numbers, irreducible factor counts of `x^m - 1`,
//! simple-module counts, left-cell sizes and Deligne parameters.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cells::{apex_set, enumerate_half_diagrams, ZeroPattern};
use crate::diagram::Family;
use crate::error::{MoebiusError, Result};
use crate::msmall::count_types;
use crate::rational::{q_frac, Q};

/// `p(n)` by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> BigUint {
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * &p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * &p[m - g2];
            }
        }
        p.push(acc);
    }
    p[n].to_biguint().expect("partition counts are positive")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Char0AlgClosed,
    Rationals,
    PrimeField(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl FieldSpec {
    pub fn prime_field(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(MoebiusError::InvalidParams(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Char0AlgClosed => write!(f, "char0-alg-closed"),
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = MoebiusError;

    /// Accepts `char0`, `complex`, `rationals`, `q`, `F5`, `p5`, `prime:5`.
    fn from_str(s: &str) -> Result<FieldSpec> {
        let key = s.trim().to_ascii_lowercase();
        match key.as_str() {
            "char0" | "char0-alg-closed" | "complex" | "c" | "algclosed" => return Ok(FieldSpec::Char0AlgClosed),
            "rationals" | "q" | "rational" => return Ok(FieldSpec::Rationals),
            _ => {}
        }
        let digits = key.trim_start_matches("prime:").trim_start_matches(['f', 'p']);
        let p: u64 = digits.parse().map_err(|_| MoebiusError::Parse(format!("unknown field {s:?}")))?;
        FieldSpec::prime_field(p)
    }
}

/// `k` with every factor of the characteristic removed.
pub fn m_of_k(field: FieldSpec, k: u64) -> u64 {
    match field {
        FieldSpec::PrimeField(p) => {
            let mut m = k;
            while m % p == 0 && m > 0 {
                m /= p;
            }
            m
        }
        _ => k,
    }
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

fn euler_phi(d: u64) -> u64 {
    (1..=d).filter(|&x| x.gcd(&d) == 1).count() as u64
}

/// Multiplicative order of `p` modulo `d`, with `ord_1 = 1`.
fn mult_order(p: u64, d: u64) -> u64 {
    if d == 1 {
        return 1;
    }
    let mut x = p % d;
    let mut k = 1;
    while x != 1 {
        x = x * p % d;
        k += 1;
    }
    k
}

/// Number of monic irreducible factors of `x^{m(k)} - 1`.
pub fn n_irreducible_factors(field: FieldSpec, k: u64) -> u64 {
    let m = m_of_k(field, k);
    match field {
        FieldSpec::Char0AlgClosed => m,
        FieldSpec::Rationals => divisors(m).len() as u64,
        FieldSpec::PrimeField(p) => divisors(m).into_iter().map(|d| euler_phi(d) / mult_order(p, d)).sum(),
    }
}

/// `1 + N(r) + N(2r)`.
pub fn s_value(field: FieldSpec, r: u64) -> Result<u64> {
    if r == 0 || r % 2 == 0 {
        return Err(MoebiusError::Precondition(format!("r = {r} must be odd")));
    }
    Ok(1 + n_irreducible_factors(field, r) + n_irreducible_factors(field, 2 * r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleCountQuery {
    pub family: Family,
    pub n: usize,
    pub lambda_ts: usize,
    pub field: FieldSpec,
    pub r: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleCount {
    pub s: u64,
    #[serde(with = "crate::rational::as_string")]
    pub value: BigUint,
    /// False when the value is only an upper bound.
    pub exact: bool,
}

/// Simples with apex `lambda`: `s^lambda` for planar families, a sum of partition products otherwise.
pub fn count_simples(q: &SimpleCountQuery) -> Result<SimpleCount> {
    let s = s_value(q.field, q.r)?;
    if !apex_set(q.family, q.n, ZeroPattern::SomeNonzero).apexes.contains(&q.lambda_ts) {
        return Err(MoebiusError::Precondition(format!(
            "lambda = {} is not an apex of {} with n = {}",
            q.lambda_ts, q.family, q.n
        )));
    }
    if q.family.is_planar() {
        Ok(SimpleCount { s, value: BigUint::from(s).pow(q.lambda_ts as u32), exact: true })
    } else {
        Ok(SimpleCount { s, value: count_types(q.lambda_ts, s as usize), exact: q.field == FieldSpec::Char0AlgClosed })
    }
}

fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `(2t - 1)!!`, equal to 1 for `t = 0`.
fn odd_double_factorial(t: usize) -> BigUint {
    (1..=t).fold(BigUint::one(), |acc, i| acc * BigUint::from(2 * i - 1))
}

/// Stirling numbers of the second kind.
fn stirling2(n: usize, k: usize) -> BigUint {
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = BigUint::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k].clone()
}

fn to_q(x: BigUint) -> Q {
    Q::from_integer(BigInt::from(x))
}

/// Closed-form number of left cells `#L_lambda`, optionally checked against enumeration.
pub fn dim_left_cell(f: Family, n: usize, lambda: usize, k: usize, check: bool) -> Result<BigUint> {
    if !f.admits_lambda(n, lambda) {
        return Err(MoebiusError::Precondition(format!("lambda = {lambda} is not admissible for {f} with n = {n}")));
    }
    if k == 0 {
        return Err(MoebiusError::Precondition("K must be positive".into()));
    }
    let w = BigUint::from(3 * k);
    let wp = |e: usize| w.pow(e as u32);
    let value: BigUint = match f {
        Family::Partition => (lambda..=n).map(|t| stirling2(n, t) * binom(t, lambda) * wp(t - lambda)).sum(),
        Family::PlanarPartition => {
            let x = q_frac(4 * lambda as i64 + 2, 2 * n as i64 + 2 * lambda as i64 + 2)
                * to_q(binom(2 * n, n - lambda) * wp(n - lambda));
            integral(x)?
        }
        Family::RookBrauer => (0..=(n - lambda) / 2)
            .map(|t| binom(n, lambda) * binom(n - lambda, 2 * t) * odd_double_factorial(t) * wp(n - lambda - t))
            .sum(),
        Family::Motzkin => {
            let mut acc = Q::zero();
            for t in 0..=(n - lambda) / 2 {
                acc += q_frac(lambda as i64 + 1, (lambda + t + 1) as i64)
                    * to_q(binom(n, lambda + 2 * t) * binom(lambda + 2 * t, t) * wp(n - lambda - t));
            }
            integral(acc)?
        }
        Family::Brauer => {
            let t = (n - lambda) / 2;
            binom(n, lambda) * odd_double_factorial(t) * wp(t)
        }
        Family::TemperleyLieb => {
            let t = (n - lambda) / 2;
            let x = q_frac(2 * lambda as i64 + 2, (n + lambda + 2) as i64) * to_q(binom(n, t) * wp(t));
            integral(x)?
        }
        Family::Rook | Family::PlanarRook => binom(n, lambda) * wp(n - lambda),
        Family::Symmetric | Family::PlanarSymmetric => BigUint::one(),
    };
    if check {
        let enumerated = enumerate_half_diagrams(f, n, lambda, k)?.len();
        if BigUint::from(enumerated) != value {
            return Err(MoebiusError::Invariant(format!(
                "{f} n={n} lambda={lambda} K={k}: closed form {value} but enumeration finds {enumerated}"
            )));
        }
    }
    Ok(value)
}

fn integral(x: Q) -> Result<BigUint> {
    if !x.is_integer() {
        return Err(MoebiusError::Invariant(format!("closed form produced non-integer {x}")));
    }
    x.to_integer().to_biguint().ok_or_else(|| MoebiusError::Invariant(format!("closed form produced negative {x}")))
}

/// `(delta, delta_plus, delta_minus)` for the given evaluation data.
pub fn deligne_parameters(alpha0: &Q, beta0: &Q, gamma0: &Q, lam_scale: &Q, sqrt_lam: &Q) -> Result<(Q, Q, Q)> {
    if sqrt_lam * sqrt_lam != *lam_scale {
        return Err(MoebiusError::Precondition(format!("{sqrt_lam} squared is not {lam_scale}")));
    }
    let half = q_frac(1, 2);
    let delta = lam_scale * alpha0 - gamma0;
    let plus = &half * (gamma0 + sqrt_lam * beta0);
    let minus = &half * (gamma0 - sqrt_lam * beta0);
    Ok((delta, plus, minus))
}

/// Small helper for callers that want plain integers.
pub fn biguint_to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}
