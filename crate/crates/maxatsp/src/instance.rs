//! Problem representation: complete directed graphs with nonnegative weights,
//! tours, parsing and generation.
//!
//! Weights are stored as scaled 64-bit integers. A global power-of-ten scale
//! is inferred when parsing decimal inputs, and every weight is additionally
//! doubled on ingestion so that half-edge weights (half of an edge weight)
//! stay integral. All comparisons made by the solver are therefore exact.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{ParseError, SolveError};

/// Internal edge weight: `2 * scale * (input value)`.
pub type Weight = i64;

/// A complete directed graph on `n` vertices with nonnegative edge weights.
///
/// Immutable after construction; safe to share across solver invocations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    /// Row-major internal weights; diagonal entries are zero and unused.
    w: Vec<Weight>,
    /// Power-of-ten denominator of the original input values.
    scale: i64,
}

impl Instance {
    /// Build an instance from plain integer weights (scale 1).
    pub fn from_weights(w: Vec<Vec<i64>>) -> Result<Self, ParseError> {
        let n = w.len();
        if n < 2 {
            return Err(ParseError::TooFewVertices(n));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (u, row) in w.iter().enumerate() {
            if row.len() != n {
                return Err(ParseError::WrongEntryCount {
                    expected: n * n,
                    found: row.len() * n,
                });
            }
            for (v, &x) in row.iter().enumerate() {
                if x < 0 {
                    return Err(ParseError::NegativeWeight(x.to_string()));
                }
                if u == v && x != 0 {
                    return Err(ParseError::NonzeroDiagonal(u));
                }
                let scaled = x
                    .checked_mul(2)
                    .ok_or_else(|| ParseError::Overflow(x.to_string()))?;
                flat.push(scaled);
            }
        }
        Ok(Instance {
            n,
            w: flat,
            scale: 1,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Internal (doubled, scaled) weight of edge `(u, v)`.
    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> Weight {
        self.w[u * self.n + v]
    }

    /// Exactly half the internal weight of `(u, v)`; integral by construction.
    #[inline]
    pub fn half_weight(&self, u: usize, v: usize) -> Weight {
        self.weight(u, v) / 2
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Convert an internal weight back to input units.
    pub fn display(&self, internal: Weight) -> f64 {
        internal as f64 / (2.0 * self.scale as f64)
    }

    pub fn max_internal_weight(&self) -> Weight {
        self.w.iter().copied().max().unwrap_or(0)
    }

    /// All ordered pairs `(u, v)` with `u != v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
    }

    /// Parse the instance text format: first line `n`, then `n` rows of `n`
    /// whitespace-separated numbers with a zero diagonal.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut tokens = text.split_whitespace();
        let head = tokens.next().ok_or(ParseError::MissingHeader)?;
        let n: usize = head
            .parse()
            .map_err(|_| ParseError::BadVertexCount(head.to_string()))?;
        if n < 2 {
            return Err(ParseError::TooFewVertices(n));
        }
        let rest: Vec<&str> = tokens.collect();
        if rest.len() != n * n {
            return Err(ParseError::WrongEntryCount {
                expected: n * n,
                found: rest.len(),
            });
        }
        let mut parsed = Vec::with_capacity(n * n);
        let mut max_decimals = 0u32;
        for tok in &rest {
            let d = parse_decimal(tok)?;
            max_decimals = max_decimals.max(d.decimals);
            parsed.push(d);
        }
        let mut scale: i64 = 1;
        for _ in 0..max_decimals {
            scale = scale
                .checked_mul(10)
                .ok_or_else(|| ParseError::Overflow("scale".into()))?;
        }
        let mut flat = Vec::with_capacity(n * n);
        for (idx, d) in parsed.iter().enumerate() {
            let (u, v) = (idx / n, idx % n);
            let pow = 10i64.pow(max_decimals - d.decimals);
            let raw = d
                .numerator
                .checked_mul(pow)
                .ok_or_else(|| ParseError::Overflow(rest[idx].to_string()))?;
            if u == v && raw != 0 {
                return Err(ParseError::NonzeroDiagonal(u));
            }
            let scaled = raw
                .checked_mul(2)
                .ok_or_else(|| ParseError::Overflow(rest[idx].to_string()))?;
            flat.push(scaled);
        }
        Ok(Instance {
            n,
            w: flat,
            scale,
        })
    }

    /// Render in the same format `parse` accepts; `parse(render(x)) == x`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.n.to_string());
        out.push('\n');
        let digits = (self.scale as f64).log10().round() as usize;
        for u in 0..self.n {
            for v in 0..self.n {
                if v > 0 {
                    out.push(' ');
                }
                let raw = self.weight(u, v) / 2;
                if self.scale == 1 {
                    out.push_str(&raw.to_string());
                } else {
                    let int = raw / self.scale;
                    let frac = raw % self.scale;
                    let mut s = format!("{int}.{frac:0width$}", width = digits);
                    while s.ends_with('0') {
                        s.pop();
                    }
                    if s.ends_with('.') {
                        s.pop();
                    }
                    out.push_str(&s);
                }
            }
            out.push('\n');
        }
        out
    }

    /// Uniform random integer weights in `[0, max_w]`; deterministic per seed.
    pub fn random(n: usize, max_w: i64, seed: u64) -> Result<Self, ParseError> {
        if n < 2 {
            return Err(ParseError::TooFewVertices(n));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut w = vec![vec![0i64; n]; n];
        for (u, row) in w.iter_mut().enumerate() {
            for (v, x) in row.iter_mut().enumerate() {
                if u != v && max_w > 0 {
                    *x = rng.random_range(0..=max_w);
                }
            }
        }
        Instance::from_weights(w)
    }
}

struct Decimal {
    numerator: i64,
    decimals: u32,
}

/// Exact nonnegative decimal parser; trailing fractional zeros are dropped so
/// the inferred scale is canonical.
fn parse_decimal(tok: &str) -> Result<Decimal, ParseError> {
    let (int_part, frac_part) = match tok.split_once('.') {
        Some((i, f)) => (i, f.trim_end_matches('0')),
        None => (tok, ""),
    };
    if tok.starts_with('-') {
        return Err(ParseError::NegativeWeight(tok.to_string()));
    }
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(ParseError::NonNumeric(tok.to_string()));
    }
    let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(ParseError::NonNumeric(tok.to_string()));
    }
    let mut numerator: i64 = if int_part.is_empty() {
        0
    } else {
        int_part
            .parse()
            .map_err(|_| ParseError::Overflow(tok.to_string()))?
    };
    for c in frac_part.chars() {
        numerator = numerator
            .checked_mul(10)
            .and_then(|x| x.checked_add((c as u8 - b'0') as i64))
            .ok_or_else(|| ParseError::Overflow(tok.to_string()))?;
    }
    Ok(Decimal {
        numerator,
        decimals: frac_part.len() as u32,
    })
}

/// A Hamiltonian directed cycle given as a cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tour {
    order: Vec<usize>,
}

impl Tour {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self, SolveError> {
        if order.len() != n {
            return Err(SolveError::NotAPermutation);
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(SolveError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Tour { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The `n` consecutive directed edges of the tour.
    pub fn tour_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order.len();
        (0..n).map(move |i| (self.order[i], self.order[(i + 1) % n]))
    }

    pub fn weight(&self, inst: &Instance) -> Weight {
        self.tour_edges().map(|(u, v)| inst.weight(u, v)).sum()
    }

    /// Canonical rotation starting at vertex 0; used for comparisons.
    pub fn canonical(&self) -> Tour {
        let pos = self.order.iter().position(|&v| v == 0).unwrap();
        let mut order = Vec::with_capacity(self.order.len());
        order.extend_from_slice(&self.order[pos..]);
        order.extend_from_slice(&self.order[..pos]);
        Tour { order }
    }
}

/// Sum of internal weights over a tour; errors if `t` is not a permutation.
pub fn tour_weight(inst: &Instance, t: &Tour) -> Result<Weight, SolveError> {
    if t.order.len() != inst.n() {
        return Err(SolveError::NotAPermutation);
    }
    Ok(t.weight(inst))
}

/// The 9-vertex instance from the paper's first figure: a triangle `a,b,c`
/// carrying unit weights on `(a,b)`, `(b,c)`, `(c,a)` and `(a,c)`, and six
/// further vertices with all-zero weights.
pub fn figure_one_instance() -> Instance {
    let n = 9;
    let mut w = vec![vec![0i64; n]; n];
    // a=0, b=1, c=2
    w[0][1] = 1;
    w[1][2] = 1;
    w[2][0] = 1;
    w[0][2] = 1;
    Instance::from_weights(w).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_two_vertex_instance() {
        let inst = Instance::parse("2\n0 5\n3 0").unwrap();
        assert_eq!(inst.n(), 2);
        assert_eq!(inst.weight(0, 1), 10); // 5, doubled
        assert_eq!(inst.weight(1, 0), 6);
        assert_eq!(inst.scale(), 1);
    }

    #[test]
    fn parses_uniform_three_instance() {
        let inst = Instance::parse("3\n0 1 1\n1 0 1\n1 1 0").unwrap();
        for (u, v) in inst.edges() {
            assert_eq!(inst.weight(u, v), 2);
        }
    }

    #[test]
    fn figure_one_has_four_positive_entries() {
        let inst = figure_one_instance();
        let positives = inst.edges().filter(|&(u, v)| inst.weight(u, v) > 0).count();
        assert_eq!(positives, 4);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(
            Instance::parse("2\n0 5\n3"),
            Err(ParseError::WrongEntryCount { .. })
        ));
        assert!(matches!(
            Instance::parse("2\n0 -5\n3 0"),
            Err(ParseError::NegativeWeight(_))
        ));
        assert!(matches!(
            Instance::parse("2\n0 x\n3 0"),
            Err(ParseError::NonNumeric(_))
        ));
        assert!(matches!(
            Instance::parse("2\n1 5\n3 0"),
            Err(ParseError::NonzeroDiagonal(0))
        ));
        assert!(matches!(
            Instance::parse("1\n0"),
            Err(ParseError::TooFewVertices(1))
        ));
    }

    #[test]
    fn decimal_weights_share_a_scale() {
        let inst = Instance::parse("2\n0 0.5\n1.25 0").unwrap();
        assert_eq!(inst.scale(), 100);
        assert_eq!(inst.weight(0, 1), 100); // 0.5 * 100 * 2
        assert_eq!(inst.weight(1, 0), 250);
        let rendered = inst.render();
        assert_eq!(Instance::parse(&rendered).unwrap(), inst);
    }

    #[test]
    fn random_is_deterministic_and_bounded() {
        let a = Instance::random(5, 10, 42).unwrap();
        let b = Instance::random(5, 10, 42).unwrap();
        assert_eq!(a, b);
        let c = Instance::random(8, 100, 7).unwrap();
        for (u, v) in c.edges() {
            let w = c.weight(u, v);
            assert!((0..=200).contains(&w));
        }
        let zero = Instance::random(4, 0, 3).unwrap();
        assert!(zero.edges().all(|(u, v)| zero.weight(u, v) == 0));
    }

    #[test]
    fn tour_weight_matches_figure_one() {
        let inst = figure_one_instance();
        let t = Tour::new((0..9).collect(), 9).unwrap();
        // a->b->c->d->...->i->a uses (a,b) and (b,c).
        assert_eq!(tour_weight(&inst, &t).unwrap(), 4); // weight 2, doubled
    }

    #[test]
    fn tour_weight_invariant_under_rotation() {
        let inst = Instance::random(6, 50, 11).unwrap();
        let t = Tour::new(vec![3, 1, 4, 0, 5, 2], 6).unwrap();
        let r = Tour::new(vec![0, 5, 2, 3, 1, 4], 6).unwrap();
        assert_eq!(t.weight(&inst), r.weight(&inst));
        let bound = inst.n() as i64 * inst.max_internal_weight();
        assert!(t.weight(&inst) <= bound);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Tour::new(vec![0, 1, 1], 3).is_err());
        assert!(Tour::new(vec![0, 1], 3).is_err());
    }
}
