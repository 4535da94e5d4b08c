//! Closed-form expected value and full-observation polynomials for stars,
//! complete multipartite graphs and generalized barbells.
//!
//! Every formula here is checked against brute-force enumeration on the
//! generated graphs in the test suites.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::poly::binomial_big;
use crate::{Error, Poly, Result};

fn one_minus_q() -> Poly {
    Poly::one_minus_q_pow(1)
}

fn check_star(n: usize, s: usize, contains_center: bool) -> Result<()> {
    if n < 2 {
        return Err(Error::param(format!("stars have n >= 2, got n = {n}")));
    }
    if s == 0 || s > n {
        return Err(Error::param(format!("placement size {s} outside 1..={n}")));
    }
    if !contains_center && s > n - 1 {
        return Err(Error::param(format!(
            "a leaf-only placement has at most {} vertices",
            n - 1
        )));
    }
    Ok(())
}

/// `E(S_n; S, q)` for a set `S` of size `s`, with or without the centre.
///
/// The case formulas assume `n >= 3`. `S_2 = K_2` has no distinguished centre
/// (either vertex observes both), so it is handled directly.
pub fn star_expected(n: usize, s: usize, contains_center: bool) -> Result<Poly> {
    check_star(n, s, contains_center)?;
    if n == 2 {
        return Ok(Poly::one_minus_q_to(s).scale(&BigInt::from(2)));
    }
    let sb = BigInt::from(s);
    if !contains_center {
        // 1 + s(1-q) - q^s, plus the extra leaf seen when few leaves are unplaced
        let base = Poly::one() + one_minus_q().scale(&sb) - Poly::q_pow(s);
        return Ok(if s + 3 <= n {
            base
        } else if s + 2 == n {
            base + Poly::one_minus_q_pow(s)
        } else {
            base + Poly::bernstein(sb, 1, s - 1)
        });
    }
    let base = one_minus_q().scale(&BigInt::from(n)) + Poly::bernstein(s - 1, 1, 1) + Poly::q()
        - Poly::q_pow(s);
    Ok(if s + 2 <= n {
        base
    } else if s + 1 == n {
        base + Poly::bernstein(1, 1, s - 1)
    } else {
        base + Poly::bernstein(s - 1, 2, s - 2)
    })
}

/// Probability that a set placement observes all of `S_n`.
pub fn star_prob_full(n: usize, s: usize, contains_center: bool) -> Result<Poly> {
    check_star(n, s, contains_center)?;
    if n == 2 {
        return Ok(Poly::one_minus_q_to(s));
    }
    if !contains_center {
        return Ok(if s + 2 == n {
            Poly::one_minus_q_pow(s)
        } else if s + 1 == n {
            Poly::one_minus_q_pow(s) + Poly::bernstein(s, 1, s - 1)
        } else {
            Poly::zero()
        });
    }
    let base = one_minus_q();
    Ok(if s + 2 <= n {
        base
    } else if s + 1 == n {
        base + Poly::bernstein(1, 1, s - 1)
    } else {
        base + Poly::bernstein(1, 1, s - 1) + Poly::bernstein(s - 1, 2, s - 2)
    })
}

fn check_multipartite(parts: &[usize], counts: &[usize]) -> Result<()> {
    if parts.len() < 2 {
        return Err(Error::param("need at least two parts"));
    }
    if parts.len() != counts.len() {
        return Err(Error::param(format!(
            "{} parts but {} per-part counts",
            parts.len(),
            counts.len()
        )));
    }
    if let Some(r) = parts.iter().find(|&&r| r < 2) {
        return Err(Error::param(format!("part size {r} is below 2")));
    }
    if let Some((r, l)) = parts.iter().zip(counts).find(|(r, l)| l > r) {
        return Err(Error::param(format!("{l} PMUs in a part of size {r}")));
    }
    if counts.iter().sum::<usize>() == 0 {
        return Err(Error::param("placement is empty"));
    }
    Ok(())
}

/// Probability that the surviving PMUs of a set placement with `counts[i]`
/// vertices in part `i` touch at least two distinct parts:
/// `1 - q^l (1 + sum_i (q^{-l_i} - 1))`, with the negative powers cancelled.
pub fn multipartite_two_parts_prob(parts: &[usize], counts: &[usize]) -> Result<Poly> {
    check_multipartite(parts, counts)?;
    let l: usize = counts.iter().sum();
    let single_part: Poly = counts
        .iter()
        .map(|&li| Poly::q_pow(l - li) - Poly::q_pow(l))
        .sum();
    Ok(Poly::one() - Poly::q_pow(l) - single_part)
}

/// `E(K_{r_1..r_k}; S, q)` for a set placement with `counts[t]` vertices in
/// part `t`.
///
/// Whenever survivors touch two parts everything is observed. Otherwise the
/// survivors are `i >= 1` vertices of a single part `t`; they dominate every
/// other part, and the vertices outside the part force their one remaining
/// unobserved neighbour exactly when `r_t - i <= 1`. So
///
/// ```text
/// E = r * P(two parts)
///   + sum_t q^{l - l_t} sum_{i=1}^{l_t} C(l_t, i) obs(t, i) q^{l_t - i} (1 - q)^i
/// obs(t, i) = r               if r_t - i <= 1
///           = r - r_t + i     otherwise
/// ```
pub fn multipartite_expected(parts: &[usize], counts: &[usize]) -> Result<Poly> {
    let two = multipartite_two_parts_prob(parts, counts)?;
    let r: usize = parts.iter().sum();
    let l: usize = counts.iter().sum();
    let mut e = two.scale(&BigInt::from(r));
    for (&rt, &lt) in parts.iter().zip(counts) {
        let inner: Poly = (1..=lt)
            .map(|i| {
                let obs = if rt - i <= 1 { r } else { r - rt + i };
                Poly::bernstein(binomial_big(lt, i) * BigInt::from(obs), lt - i, i)
            })
            .sum();
        e = e + inner.shift(l - lt);
    }
    Ok(e)
}

/// `E(B(G1, x1, G2, x2, m); S_{r,s,t}, q)` for `G1, G2` drawn from
/// `K_1`, `K_n`, `W_n`, `C_n` and the complement of `C_{n+2}` (`n >= 3`),
/// with `l = |V(G1)|`, `n = |V(G2)|`, and `r`, `s`, `t` PMUs in `G1`, on the
/// central path and in `G2`.
pub fn barbell_expected(
    l: usize,
    n: usize,
    m: usize,
    r: usize,
    s: usize,
    t: usize,
) -> Result<Poly> {
    if l == 0 || n == 0 {
        return Err(Error::param("barbell ends need at least one vertex"));
    }
    if r > l || t > n || s > m {
        return Err(Error::param(format!(
            "counts r = {r}, s = {s}, t = {t} exceed part sizes l = {l}, m = {m}, n = {n}"
        )));
    }
    if r + s + t == 0 {
        return Err(Error::param("placement is empty"));
    }
    let big = |x: usize| BigInt::from(x);
    let alive_r = Poly::one_minus_q_to(r);
    let alive_t = Poly::one_minus_q_to(t);
    let dead_r = Poly::q_pow(r);
    let dead_t = Poly::q_pow(t);
    Ok((&alive_r * &alive_t).scale(&big(l + m + n))
        + (&alive_r * &dead_t).scale(&big(l + m + 1))
        + (&dead_r * &alive_t).scale(&big(m + n + 1))
        + (Poly::q_pow(r + t) * Poly::one_minus_q_to(s)).scale(&big(m + 2)))
}

/// A closed-form query: structure plus placement descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyQuery {
    Star {
        n: usize,
        s: usize,
        contains_center: bool,
    },
    Multipartite {
        parts: Vec<usize>,
        counts: Vec<usize>,
    },
    Barbell {
        l: usize,
        n: usize,
        m: usize,
        r: usize,
        s: usize,
        t: usize,
    },
}

impl FamilyQuery {
    pub fn expected(&self) -> Result<Poly> {
        match self {
            FamilyQuery::Star {
                n,
                s,
                contains_center,
            } => star_expected(*n, *s, *contains_center),
            FamilyQuery::Multipartite { parts, counts } => multipartite_expected(parts, counts),
            FamilyQuery::Barbell { l, n, m, r, s, t } => barbell_expected(*l, *n, *m, *r, *s, *t),
        }
    }

    /// Full-observation probability, where a closed form exists (stars).
    pub fn prob_full(&self) -> Option<Result<Poly>> {
        match self {
            FamilyQuery::Star {
                n,
                s,
                contains_center,
            } => Some(star_prob_full(*n, *s, *contains_center)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn star_cases() {
        assert_eq!(
            star_expected(4, 1, true).unwrap(),
            Poly::from_i64s(&[4, -4])
        );
        assert_eq!(
            star_expected(4, 2, false).unwrap(),
            Poly::from_i64s(&[4, -4])
        );
        for s in 1..=4 {
            let e = star_expected(7, s, false).unwrap();
            let want = Poly::one() + Poly::from_i64s(&[s as i64, -(s as i64)]) - Poly::q_pow(s);
            assert_eq!(e, want);
        }
        assert_eq!(
            star_expected(2, 1, false).unwrap(),
            Poly::from_i64s(&[2, -2])
        );
        assert_eq!(
            star_prob_full(2, 2, true).unwrap(),
            Poly::from_i64s(&[1, 0, -1])
        );
        assert!(star_expected(1, 1, true).is_err());
        assert!(star_expected(5, 5, false).is_err());
        assert!(star_expected(5, 0, true).is_err());
    }

    #[test]
    fn star_probabilities() {
        let p = star_prob_full(18, 18, true).unwrap().eval(&rat(1, 10));
        let err = p - rat(9482, 10000);
        assert!(err < rat(1, 20000) && err > rat(-1, 20000));
        assert!(star_prob_full(9, 5, false).unwrap().is_zero());
        assert_eq!(
            star_prob_full(9, 5, true).unwrap(),
            Poly::from_i64s(&[1, -1])
        );
    }

    #[test]
    fn two_parts() {
        let sq = Poly::one_minus_q_to(2).pow(2);
        assert_eq!(multipartite_two_parts_prob(&[2, 2], &[2, 2]).unwrap(), sq);
        assert!(multipartite_two_parts_prob(&[2, 2], &[1, 0])
            .unwrap()
            .is_zero());
        assert_eq!(
            multipartite_two_parts_prob(&[3, 3], &[1, 1]).unwrap(),
            Poly::one_minus_q_pow(2)
        );
        assert!(multipartite_two_parts_prob(&[2], &[1]).is_err());
        assert!(multipartite_two_parts_prob(&[2, 1], &[1, 0]).is_err());
        assert!(multipartite_two_parts_prob(&[2, 2], &[3, 0]).is_err());
        assert!(multipartite_two_parts_prob(&[2, 2], &[0, 0]).is_err());
    }

    #[test]
    fn multipartite_small() {
        assert_eq!(
            multipartite_expected(&[2, 2], &[1, 0]).unwrap(),
            Poly::from_i64s(&[4, -4])
        );
        assert_eq!(
            multipartite_expected(&[2, 2], &[2, 2]).unwrap(),
            Poly::one_minus_q_to(4).scale(&BigInt::from(4))
        );
        assert_eq!(
            multipartite_expected(&[3, 3], &[1, 1]).unwrap().coeff(0),
            BigInt::from(6)
        );
    }

    #[test]
    fn barbell_small() {
        let e = barbell_expected(3, 4, 2, 1, 0, 0).unwrap();
        assert_eq!(e, Poly::from_i64s(&[6, -6]));
        let e = barbell_expected(3, 4, 2, 1, 0, 1).unwrap();
        assert_eq!(e.coeff(0), BigInt::from(9));
        assert!(barbell_expected(3, 4, 0, 1, 1, 0).is_err());
        assert!(barbell_expected(3, 4, 2, 4, 0, 0).is_err());
    }

    #[test]
    fn query_dispatch() {
        let q = FamilyQuery::Star {
            n: 5,
            s: 2,
            contains_center: true,
        };
        assert_eq!(q.expected().unwrap(), star_expected(5, 2, true).unwrap());
        assert!(q.prob_full().is_some());
        let q = FamilyQuery::Barbell {
            l: 1,
            n: 1,
            m: 0,
            r: 1,
            s: 0,
            t: 0,
        };
        assert_eq!(q.expected().unwrap(), Poly::from_i64s(&[2, -2]));
        assert!(q.prob_full().is_none());
    }
}
