//! Exact per-vertex profiles and global indices for connected graphs.
//!
//! Everything is integer arithmetic except the Harary index, which is kept
//! as an exact reduced rational. Distances come from one BFS per source over
//! the bit-set adjacency; no floating point enters any stored value.

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph is disconnected; eccentricities are undefined")]
    Disconnected,
}

/// Exact rational value, serialized as `{"num", "den", "decimal"}`.
///
/// `num`/`den` are emitted as JSON integers when they fit in an i64 and as
/// decimal strings otherwise (reduced Harary denominators can exceed 2^63
/// only for diameters past ~42).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(pub Ratio<i128>);

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn zero() -> Self {
        Rational(Ratio::new(0, 1))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn serialize_i128<S: Serializer>(v: i128, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(x) => s.serialize_i64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Big(i128);
        impl Serialize for Big {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                serialize_i128(self.0, s)
            }
        }
        let mut st = s.serialize_struct("Rational", 3)?;
        st.serialize_field("num", &Big(self.numer()))?;
        st.serialize_field("den", &Big(self.denom()))?;
        st.serialize_field("decimal", &format!("{}", self.to_f64()))?;
        st.end()
    }
}

/// Per-vertex sequences, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexProfile {
    /// deg(v)
    pub degree: Vec<u32>,
    /// δ(v) = Σ_{u ∈ N(v)} deg(u)
    pub neighbor_degree_sum: Vec<u32>,
    /// ε(v)
    pub eccentricity: Vec<u32>,
    /// D(v) = Σ_u d(v, u)
    pub distance_sum: Vec<u32>,
}

/// Every global invariant used anywhere in the bound catalogue.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSet {
    pub n: u32,
    pub m: u32,
    pub max_degree: u32,
    pub min_degree: u32,
    pub radius: u32,
    pub diameter: u32,
    /// θ(G) = Σ ε(v)
    pub theta: u64,
    /// M₁(G) = Σ deg(v)²
    pub m1: u64,
    /// M₂(G) = Σ_{uv ∈ E} deg(u)·deg(v)
    pub m2: u64,
    /// E₁(G) = Σ ε(v)²
    pub e1: u64,
    /// E₂(G) = Σ_{uv ∈ E} ε(u)·ε(v)
    pub e2: u64,
    /// W(G) = Σ_{u<v} d(u, v)
    pub wiener: u64,
    /// H(G) = Σ_{u<v} 1/d(u, v), exact and reduced
    pub harary: Rational,
    /// ξ_c(G) = Σ δ(v)·ε(v) — the modified eccentric connectivity index
    pub xi_c: u64,
    /// ξ^c(G) = Σ deg(v)·ε(v) — the eccentric connectivity index
    pub xi_cc: u64,
    pub profile: VertexProfile,
}

/// Symmetric all-pairs distance table with 8-bit entries (d ≤ 63).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    d: Vec<u8>,
}

impl DistanceTable {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v] as u32
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

#[inline(always)]
fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Runs one BFS from `src`, invoking `on_level(depth, frontier_mask)` for
/// each nonempty level at depth ≥ 1. Returns false if some vertex is
/// unreachable.
#[inline]
fn bfs_levels(adj: &[u64], n: usize, src: usize, mut on_level: impl FnMut(u32, u64)) -> bool {
    let full = full_mask(n);
    let mut seen = 1u64 << src;
    let mut frontier = seen;
    let mut depth = 0u32;
    while seen != full {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= !seen;
        if next == 0 {
            return false;
        }
        depth += 1;
        on_level(depth, next);
        seen |= next;
        frontier = next;
    }
    true
}

/// All-pairs shortest path distances by n BFS runs.
///
/// Errors on disconnected input (an unreachable vertex is detected during
/// the BFS from vertex 0 already).
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceTable, InvariantError> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut d = vec![0u8; n * n];
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        let ok = bfs_levels(adj, n, src, |depth, mut frontier| {
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                row[v] = depth as u8;
            }
        });
        if !ok {
            return Err(InvariantError::Disconnected);
        }
    }
    Ok(DistanceTable { n, d })
}

fn lcm_to(d: u32) -> i128 {
    (1..=d as i128).fold(1i128, num_integer::lcm)
}

/// Computes the full [`InvariantSet`] of a connected graph.
///
/// The modified index is computed both as the vertex sum Σ δ(v)ε(v) and as
/// the edge sum Σ_{uv∈E} [deg(u)ε(v) + deg(v)ε(u)]; the two routes must
/// agree or this panics (internal cross-check).
///
/// The 1-vertex graph is accepted and yields the all-zero set.
pub fn compute_all(g: &Graph) -> Result<InvariantSet, InvariantError> {
    let n = g.vertex_count();
    let adj = g.adjacency();

    let degree: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let two_m: u64 = degree.iter().map(|&d| d as u64).sum();
    let m = (two_m / 2) as u32;
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let min_degree = degree.iter().copied().min().unwrap_or(0);

    let neighbor_degree_sum: Vec<u32> = (0..n)
        .map(|v| g.neighbor_ids(v).map(|u| degree[u]).sum())
        .collect();

    let mut eccentricity = vec![0u32; n];
    let mut distance_sum = vec![0u32; n];
    // Ordered distance counts; index = distance, d ≤ n − 1 ≤ 63.
    let mut dist_count = [0u64; 64];
    for src in 0..n {
        let mut ecc = 0u32;
        let mut dsum = 0u32;
        let ok = bfs_levels(adj, n, src, |depth, frontier| {
            let c = frontier.count_ones();
            ecc = depth;
            dsum += depth * c;
            dist_count[depth as usize] += c as u64;
        });
        if !ok {
            return Err(InvariantError::Disconnected);
        }
        eccentricity[src] = ecc;
        distance_sum[src] = dsum;
    }

    let radius = eccentricity.iter().copied().min().unwrap_or(0);
    let diameter = eccentricity.iter().copied().max().unwrap_or(0);
    let theta: u64 = eccentricity.iter().map(|&e| e as u64).sum();
    let e1: u64 = eccentricity.iter().map(|&e| (e as u64).pow(2)).sum();
    let m1: u64 = degree.iter().map(|&d| (d as u64).pow(2)).sum();
    let wiener: u64 = distance_sum.iter().map(|&s| s as u64).sum::<u64>() / 2;

    // H = (Σ_d count_d / d) / 2 over ordered pairs; exact via a common
    // denominator L = lcm(1..=diameter).
    let harary = if diameter == 0 {
        Rational::zero()
    } else {
        let l = lcm_to(diameter);
        let acc: i128 = (1..=diameter as usize)
            .map(|d| dist_count[d] as i128 * (l / d as i128))
            .sum();
        Rational::new(acc, 2 * l)
    };

    let mut m2 = 0u64;
    let mut e2 = 0u64;
    let mut xi_c_edges = 0u64;
    for v in 0..n.saturating_sub(1) {
        let mut row = adj[v] >> (v + 1); // neighbours u > v; v + 1 ≤ 63 here
        let mut u = v + 1;
        while row != 0 {
            let shift = row.trailing_zeros() as usize;
            u += shift;
            row >>= shift + 1;
            m2 += degree[v] as u64 * degree[u] as u64;
            e2 += eccentricity[v] as u64 * eccentricity[u] as u64;
            xi_c_edges += degree[v] as u64 * eccentricity[u] as u64
                + degree[u] as u64 * eccentricity[v] as u64;
            u += 1;
        }
    }

    let xi_c: u64 = (0..n)
        .map(|v| neighbor_degree_sum[v] as u64 * eccentricity[v] as u64)
        .sum();
    let xi_cc: u64 = (0..n)
        .map(|v| degree[v] as u64 * eccentricity[v] as u64)
        .sum();

    assert_eq!(
        xi_c, xi_c_edges,
        "vertex-sum and edge-sum forms of the modified index disagree"
    );
    debug_assert_eq!(
        neighbor_degree_sum.iter().map(|&x| x as u64).sum::<u64>(),
        m1,
        "Σ δ(v) must equal M1"
    );
    debug_assert_eq!(
        (0..n)
            .map(|v| degree[v] as u64 * neighbor_degree_sum[v] as u64)
            .sum::<u64>(),
        2 * m2,
        "Σ deg(v)δ(v) must equal 2·M2"
    );
    debug_assert!(radius <= diameter && diameter <= 2 * radius.max(1));

    Ok(InvariantSet {
        n: n as u32,
        m,
        max_degree,
        min_degree,
        radius,
        diameter,
        theta,
        m1,
        m2,
        e1,
        e2,
        wiener,
        harary,
        xi_c,
        xi_cc,
        profile: VertexProfile {
            degree,
            neighbor_degree_sum,
            eccentricity,
            distance_sum,
        },
    })
}

/// ξ_c(G) = Σ δ(v)·ε(v) without building the rest of the invariant set.
pub fn modified_eccentric_connectivity(g: &Graph) -> Result<u64, InvariantError> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let degree: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut sum = 0u64;
    for v in 0..n {
        let mut ecc = 0u32;
        if !bfs_levels(adj, n, v, |depth, _| ecc = depth) {
            return Err(InvariantError::Disconnected);
        }
        let delta_v: u64 = g.neighbor_ids(v).map(|u| degree[u] as u64).sum();
        sum += delta_v * ecc as u64;
    }
    Ok(sum)
}
