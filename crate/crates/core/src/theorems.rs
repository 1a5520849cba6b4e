//! Empirical checks of transitivity-number formulas for graph products.
//!
//! Four statements are checked, each comparing a predicted orbit count with
//! the one computed by the orbit machinery:
//!
//! | id                  | instance                         | predicted            |
//! |---------------------|----------------------------------|----------------------|
//! | `path-product`      | `P_m □ P_n`, `m != n`            | `r(P_m) · r(P_n)`    |
//! | `path-square`       | `P_n □ P_n`                      | `r (r + 1) / 2`      |
//! | `product-general`   | `G ∗ H`, non-isomorphic, ∗ ∈ {□, ⊠} | `r(G) · r(H)`     |
//! | `product-isomorphic`| `G ∗ G`, ∗ ∈ {□, ⊠}              | `r (r + 1) / 2`      |
//!
//! A mismatch is recorded as a FAIL instance, not raised as an error. Each
//! instance also records whether `computed <= predicted`, the bound that
//! lifted factor automorphisms always guarantee.

use std::fmt::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{brute_force_automorphisms, brute_force_isomorphic, DEFAULT_NODE_BUDGET};
use crate::corpus::{Corpus, MAX_CORPUS_ORDER};
use crate::error::{Error, Result};
use crate::graph::{make_path, Graph};
use crate::orbits::{orbit_partition, orbits_with_budget};
use crate::products::{product_with_limit, ProductKind, DEFAULT_PRODUCT_LIMIT};

/// Products up to this many vertices are also checked against the
/// brute-force oracle.
pub const ORACLE_PRODUCT_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "path-product")]
    PathProduct,
    #[serde(rename = "path-square")]
    PathSquare,
    #[serde(rename = "product-general")]
    ProductGeneral,
    #[serde(rename = "product-isomorphic")]
    ProductIsomorphic,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] =
        [TheoremId::PathProduct, TheoremId::PathSquare, TheoremId::ProductGeneral, TheoremId::ProductIsomorphic];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::PathProduct => "path-product",
            TheoremId::PathSquare => "path-square",
            TheoremId::ProductGeneral => "product-general",
            TheoremId::ProductIsomorphic => "product-isomorphic",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// The statement's hypothesis does not hold or could not be decided.
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremInstance {
    pub factors: String,
    pub kind: ProductKind,
    pub product_order: usize,
    pub left_r: usize,
    pub right_r: usize,
    pub predicted: usize,
    /// `None` when skipped before the product was analysed.
    pub computed: Option<usize>,
    /// Brute-force orbit count, for products small enough.
    pub oracle: Option<usize>,
    pub verdict: Verdict,
    /// `computed <= predicted`.
    pub bound_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub instances: Vec<TheoremInstance>,
    /// Instances whose computed value differs from the prediction.
    pub counterexamples: Vec<TheoremInstance>,
}

impl TheoremReport {
    pub fn new(theorem_id: TheoremId, instances: Vec<TheoremInstance>) -> Self {
        let counterexamples = instances.iter().filter(|i| i.verdict == Verdict::Fail).cloned().collect();
        TheoremReport { theorem_id, instances, counterexamples }
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.instances.iter().filter(|i| i.verdict == verdict).count()
    }

    /// Instances where `computed > predicted`; never expected.
    pub fn bound_violations(&self) -> usize {
        self.instances.iter().filter(|i| !i.bound_holds).count()
    }

    /// Instances where `computed < predicted`.
    pub fn strict_inequalities(&self) -> impl Iterator<Item = &TheoremInstance> {
        self.instances.iter().filter(|i| i.computed.is_some_and(|c| c < i.predicted))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned plain-text table followed by a summary line.
    pub fn to_table(&self) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        let header = ["factors", "kind", "|V|", "r_G", "r_H", "predicted", "computed", "oracle", "verdict", "bound"];
        let rows: Vec<[String; 10]> = self
            .instances
            .iter()
            .map(|i| {
                [
                    i.factors.clone(),
                    i.kind.to_string(),
                    i.product_order.to_string(),
                    i.left_r.to_string(),
                    i.right_r.to_string(),
                    i.predicted.to_string(),
                    opt(i.computed),
                    opt(i.oracle),
                    i.verdict.to_string(),
                    if i.bound_holds { "ok" } else { "VIOLATED" }.to_string(),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |cells: &mut dyn Iterator<Item = &str>| {
            let parts: Vec<String> =
                cells.zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
        };
        line(&mut header.iter().copied());
        for row in &rows {
            line(&mut row.iter().map(String::as_str));
        }
        writeln!(
            out,
            "{}: {} instances, {} PASS, {} FAIL, {} SKIP, {} strict inequalities, {} bound violations",
            self.theorem_id,
            self.instances.len(),
            self.count(Verdict::Pass),
            self.count(Verdict::Fail),
            self.count(Verdict::Skip),
            self.strict_inequalities().count(),
            self.bound_violations(),
        )
        .unwrap();
        for i in &self.instances {
            if let Some(note) = &i.note {
                writeln!(out, "note: {}: {}", i.factors, note).unwrap();
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HarnessConfig {
    pub node_budget: u64,
    pub product_limit: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig { node_budget: DEFAULT_NODE_BUDGET, product_limit: DEFAULT_PRODUCT_LIMIT }
    }
}

fn orbit_count(g: &Graph, cfg: &HarnessConfig) -> Result<usize> {
    Ok(orbits_with_budget(g, cfg.node_budget)?.count())
}

fn oracle_count(g: &Graph) -> Result<Option<usize>> {
    if g.order() > ORACLE_PRODUCT_LIMIT {
        return Ok(None);
    }
    Ok(Some(orbit_partition(&brute_force_automorphisms(g)?).count()))
}

fn require_theorem_kind(kind: ProductKind) -> Result<()> {
    match kind {
        ProductKind::Cartesian | ProductKind::Strong => Ok(()),
        other => Err(Error::InvalidSize(format!("no transitivity formula is checked for {other} products"))),
    }
}

/// Computes `r(g ∗ h)` and fills in the verdict.
fn evaluate(
    factors: String,
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    (left_r, right_r): (usize, usize),
    predicted: usize,
    cfg: &HarnessConfig,
) -> Result<TheoremInstance> {
    let (product, _) = product_with_limit(kind, g, h, cfg.product_limit)?;
    let computed = orbit_count(&product, cfg)?;
    let oracle = oracle_count(&product)?;
    let note = match oracle {
        Some(o) if o != computed => Some(format!("oracle disagrees: {o} orbits")),
        _ => None,
    };
    Ok(TheoremInstance {
        factors,
        kind,
        product_order: product.order(),
        left_r,
        right_r,
        predicted,
        computed: Some(computed),
        oracle,
        verdict: if computed == predicted { Verdict::Pass } else { Verdict::Fail },
        bound_holds: computed <= predicted,
        note,
    })
}

fn skipped(
    factors: String,
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    (left_r, right_r): (usize, usize),
    predicted: usize,
    note: String,
) -> TheoremInstance {
    TheoremInstance {
        factors,
        kind,
        product_order: g.order() * h.order(),
        left_r,
        right_r,
        predicted,
        computed: None,
        oracle: None,
        verdict: Verdict::Skip,
        bound_holds: true,
        note: Some(note),
    }
}

/// `r(P_m □ P_n)` against `r(P_m) · r(P_n)`, for `m != n`.
pub fn check_path_product(m: usize, n: usize, cfg: &HarnessConfig) -> Result<TheoremInstance> {
    if m == n || m == 0 || n == 0 {
        return Err(Error::InvalidSize(format!("path-product needs distinct positive orders, got {m} and {n}")));
    }
    let (pm, pn) = (make_path(m)?, make_path(n)?);
    let rs = (orbit_count(&pm, cfg)?, orbit_count(&pn, cfg)?);
    evaluate(format!("P{m} □ P{n}"), ProductKind::Cartesian, &pm, &pn, rs, rs.0 * rs.1, cfg)
}

/// `r(P_n □ P_n)` against `r (r + 1) / 2` with `r = r(P_n)`.
pub fn check_path_square(n: usize, cfg: &HarnessConfig) -> Result<TheoremInstance> {
    let p = make_path(n)?;
    let r = orbit_count(&p, cfg)?;
    evaluate(format!("P{n} □ P{n}"), ProductKind::Cartesian, &p, &p, (r, r), r * (r + 1) / 2, cfg)
}

/// Whether two graphs are isomorphic, when it can be decided cheaply.
fn isomorphism_status(g: &Graph, h: &Graph) -> Result<Option<bool>> {
    let fingerprint = |x: &Graph| {
        let mut local: Vec<(usize, Vec<usize>)> = x
            .vertices()
            .map(|v| {
                let mut nd: Vec<usize> = x.neighbors(v).iter().map(|&w| x.degree(w)).collect();
                nd.sort_unstable();
                (x.degree(v), nd)
            })
            .collect();
        local.sort();
        (x.order(), x.edge_count(), local)
    };
    if fingerprint(g) != fingerprint(h) {
        return Ok(Some(false));
    }
    if g.order() <= ORACLE_PRODUCT_LIMIT {
        return Ok(Some(brute_force_isomorphic(g, h)?));
    }
    Ok(None)
}

/// `r(G ∗ H)` against `r(G) · r(H)` for connected, non-isomorphic factors.
pub fn check_product_theorem(
    g: &Graph,
    h: &Graph,
    kind: ProductKind,
    factors: String,
    cfg: &HarnessConfig,
) -> Result<TheoremInstance> {
    require_theorem_kind(kind)?;
    let rs = (orbit_count(g, cfg)?, orbit_count(h, cfg)?);
    let predicted = rs.0 * rs.1;
    if !g.is_connected() || !h.is_connected() {
        return Ok(skipped(factors, kind, g, h, rs, predicted, "factor not connected".into()));
    }
    match isomorphism_status(g, h)? {
        Some(false) => evaluate(factors, kind, g, h, rs, predicted, cfg),
        Some(true) => Ok(skipped(factors, kind, g, h, rs, predicted, "factors are isomorphic".into())),
        None => Ok(skipped(factors, kind, g, h, rs, predicted, "isomorphism undecided".into())),
    }
}

/// `r(G ∗ G)` against `r (r + 1) / 2`.
pub fn check_isomorphic_corollary(
    g: &Graph,
    kind: ProductKind,
    name: &str,
    cfg: &HarnessConfig,
) -> Result<TheoremInstance> {
    require_theorem_kind(kind)?;
    let r = orbit_count(g, cfg)?;
    let predicted = r * (r + 1) / 2;
    let factors = format!("{name} {} {name}", kind.symbol());
    if !g.is_connected() {
        return Ok(skipped(factors, kind, g, g, (r, r), predicted, "factor not connected".into()));
    }
    evaluate(factors, kind, g, g, (r, r), predicted, cfg)
}

/// Runs [`check_product_theorem`] on every pair of distinct corpus graphs
/// with at most `max_factor_vertices` vertices. Instances are ordered by
/// corpus position of the pair.
pub fn counterexample_search(
    corpus: &Corpus,
    max_factor_vertices: usize,
    kind: ProductKind,
    cfg: &HarnessConfig,
) -> Result<TheoremReport> {
    if max_factor_vertices > MAX_CORPUS_ORDER {
        return Err(Error::InvalidSize(format!(
            "factor bound {max_factor_vertices} exceeds the corpus limit of {MAX_CORPUS_ORDER}"
        )));
    }
    let graphs: Vec<_> = corpus.iter().filter(|e| e.graph.order() <= max_factor_vertices).collect();
    let pairs: Vec<(usize, usize)> =
        (0..graphs.len()).flat_map(|i| (i + 1..graphs.len()).map(move |j| (i, j))).collect();
    let instances = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (graphs[i], graphs[j]);
            let factors = format!("{} {} {}", a.name, kind.symbol(), b.name);
            check_product_theorem(&a.graph, &b.graph, kind, factors, cfg)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport::new(TheoremId::ProductGeneral, instances))
}

/// Runs one theorem over the instance family bounded by `max`:
/// path orders up to `max` for the path statements, corpus graphs with at
/// most `max` vertices for the product statements.
pub fn run_theorem(
    id: TheoremId,
    max: usize,
    kinds: &[ProductKind],
    corpus: &Corpus,
    cfg: &HarnessConfig,
) -> Result<TheoremReport> {
    let instances = match id {
        TheoremId::PathProduct => {
            let pairs: Vec<(usize, usize)> = (1..=max).flat_map(|m| (m + 1..=max).map(move |n| (m, n))).collect();
            pairs.par_iter().map(|&(m, n)| check_path_product(m, n, cfg)).collect::<Result<Vec<_>>>()?
        }
        TheoremId::PathSquare => {
            (1..=max).into_par_iter().map(|n| check_path_square(n, cfg)).collect::<Result<Vec<_>>>()?
        }
        TheoremId::ProductGeneral => {
            let mut all = Vec::new();
            for &kind in kinds {
                all.extend(counterexample_search(corpus, max, kind, cfg)?.instances);
            }
            all
        }
        TheoremId::ProductIsomorphic => {
            let graphs: Vec<_> = corpus.iter().filter(|e| e.graph.order() <= max).collect();
            let mut all = Vec::new();
            for &kind in kinds {
                all.extend(
                    graphs
                        .par_iter()
                        .map(|e| check_isomorphic_corollary(&e.graph, kind, &e.name, cfg))
                        .collect::<Result<Vec<_>>>()?,
                );
            }
            all
        }
    };
    Ok(TheoremReport::new(id, instances))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_path};
    use crate::products::cartesian_product;

    fn cfg() -> HarnessConfig {
        HarnessConfig::default()
    }

    #[test]
    fn path_product_small() {
        let i = check_path_product(2, 3, &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed, i.oracle), (2, Some(2), Some(2)));
        assert_eq!(i.verdict, Verdict::Pass);
        let i = check_path_product(3, 5, &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed), (6, Some(6)));
        let i = check_path_product(1, 6, &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed), (3, Some(3)));
        assert!(check_path_product(3, 3, &cfg()).is_err());
        assert!(check_path_product(0, 3, &cfg()).is_err());
    }

    #[test]
    fn path_square_small() {
        let i = check_path_square(3, &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed), (3, Some(3)));
        let i = check_path_square(2, &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed, i.oracle), (1, Some(1), Some(1)));
        let i = check_path_square(4, &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed), (3, Some(3)));
    }

    #[test]
    fn general_theorem_examples() {
        let (k2, k3, p3) = (make_complete(2).unwrap(), make_complete(3).unwrap(), make_path(3).unwrap());
        let i = check_product_theorem(&k2, &p3, ProductKind::Cartesian, "K2 □ P3".into(), &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed, i.verdict), (2, Some(2), Verdict::Pass));
        let i = check_product_theorem(&k2, &k3, ProductKind::Strong, "K2 ⊠ K3".into(), &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed, i.verdict), (1, Some(1), Verdict::Pass));
        let i = check_product_theorem(&p3, &p3, ProductKind::Cartesian, "P3 □ P3".into(), &cfg()).unwrap();
        assert_eq!(i.verdict, Verdict::Skip);
        assert!(check_product_theorem(&k2, &k3, ProductKind::Join, "x".into(), &cfg()).is_err());
    }

    #[test]
    fn shared_prime_factor_merges_cells() {
        // P3 □ (P3 □ K2): the two P3 factors can be swapped, so the product
        // has fewer orbits than r(P3) · r(P3 □ K2) = 2 · 2.
        let p3 = make_path(3).unwrap();
        let (ladder, _) = cartesian_product(&p3, &make_complete(2).unwrap()).unwrap();
        let i = check_product_theorem(&p3, &ladder, ProductKind::Cartesian, "P3 □ L3".into(), &cfg()).unwrap();
        assert_eq!(i.predicted, 4);
        assert_eq!(i.computed, Some(3));
        assert_eq!(i.verdict, Verdict::Fail);
        assert!(i.bound_holds);
    }

    #[test]
    fn corollary_examples() {
        let k3 = make_complete(3).unwrap();
        let i = check_isomorphic_corollary(&k3, ProductKind::Cartesian, "K3", &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed), (1, Some(1)));
        let p3 = make_path(3).unwrap();
        let i = check_isomorphic_corollary(&p3, ProductKind::Cartesian, "P3", &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed), (3, Some(3)));
        let p4 = make_path(4).unwrap();
        let i = check_isomorphic_corollary(&p4, ProductKind::Strong, "P4", &cfg()).unwrap();
        assert_eq!((i.predicted, i.computed), (3, Some(3)));
    }

    #[test]
    fn search_bounds() {
        let corpus = Corpus::embedded(4).unwrap();
        let r = counterexample_search(&corpus, 1, ProductKind::Cartesian, &cfg()).unwrap();
        assert!(r.instances.is_empty());
        let r = counterexample_search(&corpus, 2, ProductKind::Cartesian, &cfg()).unwrap();
        assert_eq!(r.instances.len(), 1);
        assert_eq!(r.count(Verdict::Pass), 1);
        assert!(counterexample_search(&corpus, 9, ProductKind::Strong, &cfg()).is_err());
    }

    #[test]
    fn theorem_ids() {
        for id in TheoremId::ALL {
            assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
        }
        assert!(matches!("nope".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn table_is_aligned() {
        let report = run_theorem(TheoremId::PathSquare, 3, &[], &Corpus::default(), &cfg()).unwrap();
        let table = report.to_table();
        let lines: Vec<&str> = table.lines().collect();
        assert!(lines[0].starts_with("factors"));
        let col = |line: &str, pat: &str| line.find(pat).map(|b| line[..b].chars().count());
        assert_eq!(col(lines[0], "kind"), col(lines[1], "cartesian"));
        assert!(lines[4].starts_with("path-square: 3 instances, 3 PASS"));
    }
}
