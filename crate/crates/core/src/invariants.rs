//! Automorphism-invariant vertex properties.
//!
//! Any such property is constant on each orbit, so evaluating it at the `r`
//! orbit representatives determines it everywhere. [`evaluate_fast`] does
//! exactly that; [`evaluate_naive`] computes every vertex independently and
//! is kept as the reference.
//!
//! Betweenness is exact: path counts are big integers and dependencies are
//! big rationals, so orbit constancy can be checked with `==`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::orbits::OrbitPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Degree,
    Eccentricity,
    TotalDistance,
    Betweenness,
}

impl Property {
    pub const ALL: [Property; 4] =
        [Property::Degree, Property::Eccentricity, Property::TotalDistance, Property::Betweenness];

    pub fn name(self) -> &'static str {
        match self {
            Property::Degree => "degree",
            Property::Eccentricity => "eccentricity",
            Property::TotalDistance => "total_distance",
            Property::Betweenness => "betweenness",
        }
    }

    /// Distance-based properties are only defined on connected graphs.
    pub fn requires_connectivity(self) -> bool {
        !matches!(self, Property::Degree)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyValue {
    Integer(u64),
    Rational(BigRational),
}

impl fmt::Display for PropertyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyValue::Integer(k) => write!(f, "{k}"),
            PropertyValue::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            PropertyValue::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

/// Integers as JSON numbers, rationals as `"p/q"` strings.
impl Serialize for PropertyValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PropertyValue::Integer(k) => s.serialize_u64(*k),
            PropertyValue::Rational(_) => s.serialize_str(&self.to_string()),
        }
    }
}

fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected(what.to_string()))
    }
}

fn bfs_distances(g: &Graph, v: VertexId) -> Vec<usize> {
    g.distances_from(v).into_iter().map(|d| d.expect("caller checked connectivity")).collect()
}

pub fn degree(g: &Graph, v: VertexId) -> Result<usize> {
    g.check_vertex(v)?;
    Ok(g.degree(v))
}

pub fn eccentricity(g: &Graph, v: VertexId) -> Result<usize> {
    g.check_vertex(v)?;
    require_connected(g, "eccentricity")?;
    Ok(bfs_distances(g, v).into_iter().max().unwrap_or(0))
}

/// `D(v)`: sum of distances from `v` to every vertex.
pub fn total_distance(g: &Graph, v: VertexId) -> Result<usize> {
    g.check_vertex(v)?;
    require_connected(g, "total_distance")?;
    Ok(bfs_distances(g, v).into_iter().sum())
}

/// Shortest-path betweenness over unordered pairs `{s, t}` with
/// `s != v != t`.
pub fn betweenness(g: &Graph, v: VertexId) -> Result<BigRational> {
    g.check_vertex(v)?;
    require_connected(g, "betweenness")?;
    Ok(all_betweenness(g).swap_remove(v))
}

/// Single-source dependencies `δ_s(v) = Σ_t σ_st(v) / σ_st`.
fn dependencies(g: &Graph, s: VertexId) -> Vec<BigRational> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![BigInt::zero(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    dist[s] = 0;
    sigma[s] = BigInt::one();
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[u] + 1 {
                let add = sigma[u].clone();
                sigma[w] += add;
            }
        }
    }
    let mut delta = vec![BigRational::zero(); n];
    for &w in order.iter().rev() {
        if w == s {
            continue;
        }
        // share of each shortest s-w path, plus what flows through w
        let per_path = (BigRational::one() + &delta[w]) / BigRational::from_integer(sigma[w].clone());
        for &u in g.neighbors(w) {
            if dist[u] != usize::MAX && dist[u] + 1 == dist[w] && u != s {
                delta[u] += &per_path * BigRational::from_integer(sigma[u].clone());
            }
        }
    }
    delta
}

fn all_betweenness(g: &Graph) -> Vec<BigRational> {
    let n = g.order();
    let per_source: Vec<Vec<BigRational>> = (0..n).into_par_iter().map(|s| dependencies(g, s)).collect();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    (0..n).map(|v| per_source.iter().map(|d| &d[v]).sum::<BigRational>() * &half).collect()
}

fn value_at(g: &Graph, property: Property, v: VertexId) -> PropertyValue {
    match property {
        Property::Degree => PropertyValue::Integer(g.degree(v) as u64),
        Property::Eccentricity => PropertyValue::Integer(bfs_distances(g, v).into_iter().max().unwrap_or(0) as u64),
        Property::TotalDistance => PropertyValue::Integer(bfs_distances(g, v).into_iter().sum::<usize>() as u64),
        Property::Betweenness => unreachable!("betweenness is not a per-vertex computation"),
    }
}

/// Per-orbit values of one property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyTable {
    pub property: Property,
    pub r: usize,
    /// `(representative, value)` in orbit order.
    pub per_orbit: Vec<(VertexId, PropertyValue)>,
    /// Value at every vertex.
    pub expanded: Vec<PropertyValue>,
    /// Independent property evaluations performed: `r` on the fast path,
    /// `n` on the naive one.
    pub evaluations: usize,
}

#[derive(Serialize)]
struct OrbitValue<'a> {
    rep: VertexId,
    value: &'a PropertyValue,
}

#[derive(Serialize)]
struct PropertyReport<'a> {
    property: &'static str,
    r: usize,
    per_orbit: Vec<OrbitValue<'a>>,
    distinct_values: usize,
}

impl PropertyTable {
    /// `{"property", "r", "per_orbit": [{"rep", "value"}], "distinct_values"}`.
    pub fn report_json(&self) -> String {
        let report = PropertyReport {
            property: self.property.name(),
            r: self.r,
            per_orbit: self.per_orbit.iter().map(|(rep, value)| OrbitValue { rep: *rep, value }).collect(),
            distinct_values: distinct_value_count(self),
        };
        serde_json::to_string(&report).expect("property report serializes")
    }
}

/// Evaluates `property` at every vertex independently.
pub fn evaluate_naive(g: &Graph, property: Property) -> Result<Vec<PropertyValue>> {
    if property.requires_connectivity() {
        require_connected(g, property.name())?;
    }
    Ok(match property {
        Property::Betweenness => all_betweenness(g).into_iter().map(PropertyValue::Rational).collect(),
        _ => g.vertices().into_par_iter().map(|v| value_at(g, property, v)).collect(),
    })
}

/// Groups naively computed values by orbit.
pub fn table_from_values(property: Property, orbits: &OrbitPartition, values: Vec<PropertyValue>) -> PropertyTable {
    PropertyTable {
        property,
        r: orbits.count(),
        per_orbit: orbits.representatives().iter().map(|&rep| (rep, values[rep].clone())).collect(),
        evaluations: values.len(),
        expanded: values,
    }
}

/// Evaluates `property` once per orbit and expands the result.
///
/// Betweenness runs one single-source dependency pass per representative.
/// `Σ_{v∈O} BC(v) = ½ Σ_s Σ_{v∈O} δ_s(v)`, and the inner sum is itself
/// constant on the orbit of `s`, so it is enough to take `s` over the
/// representatives weighted by their orbit sizes.
pub fn evaluate_fast(g: &Graph, property: Property, orbits: &OrbitPartition) -> Result<PropertyTable> {
    if orbits.order() != g.order() {
        return Err(Error::InvalidGraph("orbit partition does not match the graph".into()));
    }
    if property.requires_connectivity() {
        require_connected(g, property.name())?;
    }
    let reps = orbits.representatives();
    let values: Vec<PropertyValue> = match property {
        Property::Betweenness => {
            let per_rep: Vec<Vec<BigRational>> = reps.par_iter().map(|&s| dependencies(g, s)).collect();
            orbits
                .orbits()
                .iter()
                .map(|orbit| {
                    let mut total = BigRational::zero();
                    for (source_orbit, delta) in orbits.orbits().iter().zip(&per_rep) {
                        let inner: BigRational = orbit.iter().map(|&v| &delta[v]).sum();
                        total += inner * BigRational::from_integer(BigInt::from(source_orbit.len()));
                    }
                    let denom = BigRational::from_integer(BigInt::from(2 * orbit.len()));
                    PropertyValue::Rational(total / denom)
                })
                .collect()
        }
        _ => reps.par_iter().map(|&v| value_at(g, property, v)).collect(),
    };
    let expanded = g.vertices().map(|v| values[orbits.orbit_index(v)].clone()).collect();
    Ok(PropertyTable {
        property,
        r: orbits.count(),
        per_orbit: reps.iter().copied().zip(values).collect(),
        expanded,
        evaluations: reps.len(),
    })
}

/// Distinct values over all vertices.
pub fn distinct_value_count(table: &PropertyTable) -> usize {
    table.expanded.iter().collect::<BTreeSet<_>>().len()
}

/// Timing comparison of [`evaluate_naive`] and [`evaluate_fast`].
#[derive(Clone, Debug)]
pub struct SpeedupReport {
    pub property: Property,
    pub n: usize,
    pub r: usize,
    pub naive_evaluations: usize,
    pub fast_evaluations: usize,
    /// Expanded fast output equals the naive output.
    pub identical: bool,
    pub naive_time: Duration,
    /// Fast evaluation only; the orbit computation is timed separately.
    pub fast_time: Duration,
    pub orbit_time: Duration,
}

impl SpeedupReport {
    /// `naive_time / fast_time`.
    pub fn speedup(&self) -> f64 {
        self.naive_time.as_secs_f64() / self.fast_time.as_secs_f64().max(1e-9)
    }

    /// Per-representative time of the fast path.
    pub fn time_per_representative(&self) -> Duration {
        self.fast_time / self.fast_evaluations.max(1) as u32
    }
}

/// Runs both evaluation paths on `g` and times them.
pub fn benchmark(g: &Graph, property: Property) -> Result<SpeedupReport> {
    let start = Instant::now();
    let orbits = crate::orbits::orbits(g)?;
    let orbit_time = start.elapsed();

    let start = Instant::now();
    let naive = evaluate_naive(g, property)?;
    let naive_time = start.elapsed();

    let start = Instant::now();
    let fast = evaluate_fast(g, property, orbits)?;
    let fast_time = start.elapsed();

    Ok(SpeedupReport {
        property,
        n: g.order(),
        r: orbits.count(),
        naive_evaluations: naive.len(),
        fast_evaluations: fast.evaluations,
        identical: fast.expanded == naive,
        naive_time,
        fast_time,
        orbit_time,
    })
}

/// A vertex set produced by a consensus function, with its orbit-closure
/// status checked against the orbit partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexSetResult {
    pub name: &'static str,
    pub members: Vec<VertexId>,
    pub orbit_closed: bool,
}

fn minimizers<T: Ord>(values: &[T]) -> Vec<VertexId> {
    let Some(best) = values.iter().min() else { return Vec::new() };
    (0..values.len()).filter(|&v| &values[v] == best).collect()
}

fn consensus(g: &Graph, orbits: &OrbitPartition, name: &'static str, members: Vec<VertexId>) -> VertexSetResult {
    debug_assert_eq!(g.order(), orbits.order());
    let orbit_closed = orbits.is_union_of_orbits(&members);
    VertexSetResult { name, members, orbit_closed }
}

/// Vertices of minimum eccentricity.
pub fn center(g: &Graph, orbits: &OrbitPartition) -> Result<VertexSetResult> {
    require_connected(g, "center")?;
    let ecc: Vec<usize> = g.vertices().map(|v| bfs_distances(g, v).into_iter().max().unwrap_or(0)).collect();
    Ok(consensus(g, orbits, "center", minimizers(&ecc)))
}

/// Vertices of minimum total distance.
pub fn median(g: &Graph, orbits: &OrbitPartition) -> Result<VertexSetResult> {
    require_connected(g, "median")?;
    let total: Vec<usize> = g.vertices().map(|v| bfs_distances(g, v).into_iter().sum()).collect();
    Ok(consensus(g, orbits, "median", minimizers(&total)))
}

/// Vertices of maximum betweenness.
pub fn betweenness_center(g: &Graph, orbits: &OrbitPartition) -> Result<VertexSetResult> {
    require_connected(g, "betweenness_center")?;
    let negated: Vec<BigRational> = all_betweenness(g).into_iter().map(|b| -b).collect();
    Ok(consensus(g, orbits, "betweenness_center", minimizers(&negated)))
}

/// Whether `s` is a union of whole orbits of Aut(g).
pub fn verify_orbit_closure(g: &Graph, s: &[VertexId]) -> Result<bool> {
    for &v in s {
        g.check_vertex(v)?;
    }
    Ok(crate::orbits::orbits(g)?.is_union_of_orbits(s))
}
