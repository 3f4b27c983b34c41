//! Independent oracle used by the integration and acceptance suites.
//!
//! Deliberately shares nothing with the library kernel: adjacency is a
//! boolean matrix, distances come from Floyd–Warshall (the library uses
//! bit-set BFS), the Harary index is accumulated as a per-step reduced
//! fraction (the library uses an lcm-scaled integer sum), and counts come
//! from closed-form combinatorics. The index-loop style mirrors the
//! formulas on purpose.

// Shared by several test binaries; not every binary uses every helper.
#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveInvariants {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<u64>,
    pub deltas: Vec<u64>,
    pub eccs: Vec<u64>,
    pub dist_sums: Vec<u64>,
    pub radius: u64,
    pub diameter: u64,
    pub theta: u64,
    pub m1: u64,
    pub m2: u64,
    pub e1: u64,
    pub e2: u64,
    pub wiener: u64,
    pub harary: (i128, i128),
    pub xi_c: u64,
    pub xi_cc: u64,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Floyd–Warshall based invariant computation; `None` when disconnected.
pub fn naive_invariants(n: usize, edges: &[(usize, usize)]) -> Option<NaiveInvariants> {
    const INF: u64 = u64::MAX / 4;
    let mut adj = vec![vec![false; n]; n];
    let mut dist = vec![vec![INF; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
        dist[u][v] = 1;
        dist[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = dist[i][k].saturating_add(dist[k][j]);
                if via < dist[i][j] {
                    dist[i][j] = via;
                }
            }
        }
    }
    if dist.iter().flatten().any(|&d| d >= INF) {
        return None;
    }

    let degrees: Vec<u64> = adj
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count() as u64)
        .collect();
    let deltas: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| adj[v][u]).map(|u| degrees[u]).sum())
        .collect();
    let eccs: Vec<u64> = dist.iter().map(|row| *row.iter().max().unwrap()).collect();
    let dist_sums: Vec<u64> = dist.iter().map(|row| row.iter().sum()).collect();

    let m = edges.len();
    let m1 = degrees.iter().map(|&d| d * d).sum();
    let e1 = eccs.iter().map(|&e| e * e).sum();
    let theta = eccs.iter().sum();
    let mut m2 = 0;
    let mut e2 = 0;
    for &(u, v) in edges {
        m2 += degrees[u] * degrees[v];
        e2 += eccs[u] * eccs[v];
    }
    let wiener: u64 = dist_sums.iter().sum::<u64>() / 2;

    // Harary index as a running reduced fraction.
    let (mut hn, mut hd) = (0i128, 1i128);
    for u in 0..n {
        for v in u + 1..n {
            let d = dist[u][v] as i128;
            hn = hn * d + hd;
            hd *= d;
            let g = gcd(hn, hd);
            if g > 1 {
                hn /= g;
                hd /= g;
            }
        }
    }

    let xi_c = (0..n).map(|v| deltas[v] * eccs[v]).sum();
    let xi_cc = (0..n).map(|v| degrees[v] * eccs[v]).sum();
    let radius = eccs.iter().copied().min().unwrap_or(0);
    let diameter = eccs.iter().copied().max().unwrap_or(0);

    Some(NaiveInvariants {
        n,
        m,
        degrees,
        deltas,
        eccs,
        dist_sums,
        radius,
        diameter,
        theta,
        m1,
        m2,
        e1,
        e2,
        wiener,
        harary: (hn, hd),
        xi_c,
        xi_cc,
    })
}

/// Number of connected labelled graphs on n vertices, by the standard
/// inclusion–exclusion recurrence over the component containing vertex 1.
pub fn connected_labeled_count(n: u64) -> u64 {
    fn binom(n: u64, k: u64) -> u128 {
        let mut out = 1u128;
        for i in 0..k {
            out = out * (n - i) as u128 / (i + 1) as u128;
        }
        out
    }
    let total = |k: u64| -> u128 { 1u128 << (k * (k - 1) / 2) };
    let mut c = vec![0u128; n as usize + 1];
    for k in 1..=n {
        let mut sum = 0u128;
        for j in 1..k {
            sum += binom(k - 1, j - 1) * c[j as usize] * total(k - j);
        }
        c[k as usize] = total(k) - sum;
    }
    u64::try_from(c[n as usize]).expect("count fits u64 for n <= 8")
}

/// Number of labelled j-edge matchings in the complete graph on n vertices:
/// C(n, 2j) · (2j)! / (j! · 2^j). The j = 0 term is 1 (the complete graph
/// itself).
pub fn labeled_matchings(n: u64, j: u64) -> u64 {
    if 2 * j > n {
        return 0;
    }
    let mut out = 1u128;
    // C(n, 2j)
    for i in 0..2 * j {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    // (2j)! / (j! 2^j) = (2j-1)!! = 1·3·5···(2j-1)
    let mut k = 1u128;
    let mut odd = 1u128;
    while k < 2 * j as u128 {
        odd *= k;
        k += 2;
    }
    u64::try_from(out * odd).expect("matching count fits u64")
}

#[allow(dead_code)]
pub fn edges_of(g: &meci::graph::Graph) -> Vec<(usize, usize)> {
    g.edges()
}
