//! Cartesian, strong, corona and join products with an explicit vertex map.
//!
//! Vertex layouts:
//! - Cartesian and strong: `(g, h) -> g * n_H + h` (row-major).
//! - Corona: the copy of `G` first (`0..n_G`), then the `i`-th copy of `H`
//!   at `n_G + i * n_H ..`.
//! - Join: `G` at `0..n_G`, then `H` at `n_G..n_G + n_H`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub const DEFAULT_PRODUCT_LIMIT: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Strong,
    Corona,
    Join,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Strong => "strong",
            ProductKind::Corona => "corona",
            ProductKind::Join => "join",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "□",
            ProductKind::Strong => "⊠",
            ProductKind::Corona => "◊",
            ProductKind::Join => "+",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "strong" => Ok(ProductKind::Strong),
            "corona" => Ok(ProductKind::Corona),
            "join" => Ok(ProductKind::Join),
            _ => Err(format!("unknown product kind {s:?}")),
        }
    }
}

/// Where a product vertex came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductVertex {
    /// `(g, h)` in a Cartesian or strong product.
    Pair { g: VertexId, h: VertexId },
    /// A vertex of the `G` factor (corona, join).
    Left { g: VertexId },
    /// A vertex of the `H` factor (join).
    Right { h: VertexId },
    /// Vertex `h` of the copy of `H` attached to `g` (corona).
    Copy { g: VertexId, h: VertexId },
}

/// Encodes and decodes product vertex ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProductVertexMap {
    pub kind: ProductKind,
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductVertexMap {
    pub fn order(&self) -> usize {
        let (a, b) = (self.left_order, self.right_order);
        match self.kind {
            ProductKind::Cartesian | ProductKind::Strong => a * b,
            ProductKind::Corona => a * (1 + b),
            ProductKind::Join => a + b,
        }
    }

    pub fn encode(&self, v: ProductVertex) -> Option<VertexId> {
        let (a, b) = (self.left_order, self.right_order);
        match (self.kind, v) {
            (ProductKind::Cartesian | ProductKind::Strong, ProductVertex::Pair { g, h }) if g < a && h < b => {
                Some(g * b + h)
            }
            (ProductKind::Corona | ProductKind::Join, ProductVertex::Left { g }) if g < a => Some(g),
            (ProductKind::Corona, ProductVertex::Copy { g, h }) if g < a && h < b => Some(a + g * b + h),
            (ProductKind::Join, ProductVertex::Right { h }) if h < b => Some(a + h),
            _ => None,
        }
    }

    pub fn decode(&self, v: VertexId) -> Option<ProductVertex> {
        let (a, b) = (self.left_order, self.right_order);
        if v >= self.order() {
            return None;
        }
        Some(match self.kind {
            ProductKind::Cartesian | ProductKind::Strong => ProductVertex::Pair { g: v / b, h: v % b },
            ProductKind::Corona if v < a => ProductVertex::Left { g: v },
            ProductKind::Corona => ProductVertex::Copy { g: (v - a) / b, h: (v - a) % b },
            ProductKind::Join if v < a => ProductVertex::Left { g: v },
            ProductKind::Join => ProductVertex::Right { h: v - a },
        })
    }

    /// One line per product vertex: `id <tab> origin`.
    pub fn legend(&self) -> String {
        let mut out = String::new();
        for v in 0..self.order() {
            let origin = match self.decode(v).unwrap() {
                ProductVertex::Pair { g, h } => format!("({g},{h})"),
                ProductVertex::Left { g } => format!("G{g}"),
                ProductVertex::Right { h } => format!("H{h}"),
                ProductVertex::Copy { g, h } => format!("H{h}@G{g}"),
            };
            out.push_str(&format!("{v}\t{origin}\n"));
        }
        out
    }
}

fn check_size(map: &ProductVertexMap, limit: usize) -> Result<()> {
    let vertices = map.left_order.checked_mul(map.right_order + 1).map(|_| map.order()).unwrap_or(usize::MAX);
    if vertices > limit {
        return Err(Error::ProductTooLarge { vertices, limit });
    }
    Ok(())
}

fn require_nonempty(g: &Graph, which: &str) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::InvalidSize(format!("{which} factor has no vertices")));
    }
    Ok(())
}

pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product_with_limit(kind, g, h, DEFAULT_PRODUCT_LIMIT)
}

pub fn product_with_limit(kind: ProductKind, g: &Graph, h: &Graph, limit: usize) -> Result<(Graph, ProductVertexMap)> {
    require_nonempty(g, "left")?;
    if kind != ProductKind::Corona {
        require_nonempty(h, "right")?;
    }
    let map = ProductVertexMap { kind, left_order: g.order(), right_order: h.order() };
    check_size(&map, limit)?;
    let (a, b) = (g.order(), h.order());
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    match kind {
        ProductKind::Cartesian | ProductKind::Strong => {
            let pair = |x, y| x * b + y;
            for (x1, x2) in g.edges() {
                for y in 0..b {
                    edges.push((pair(x1, y), pair(x2, y)));
                }
            }
            for x in 0..a {
                for (y1, y2) in h.edges() {
                    edges.push((pair(x, y1), pair(x, y2)));
                }
            }
            if kind == ProductKind::Strong {
                for (x1, x2) in g.edges() {
                    for (y1, y2) in h.edges() {
                        edges.push((pair(x1, y1), pair(x2, y2)));
                        edges.push((pair(x1, y2), pair(x2, y1)));
                    }
                }
            }
        }
        ProductKind::Corona => {
            edges.extend(g.edges());
            for x in 0..a {
                let base = a + x * b;
                edges.extend(h.edges().map(|(y1, y2)| (base + y1, base + y2)));
                edges.extend((0..b).map(|y| (x, base + y)));
            }
        }
        ProductKind::Join => {
            edges.extend(g.edges());
            edges.extend(h.edges().map(|(y1, y2)| (a + y1, a + y2)));
            for x in 0..a {
                edges.extend((0..b).map(|y| (x, a + y)));
            }
        }
    }
    Ok((Graph::from_edges(map.order(), edges)?, map))
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product(ProductKind::Cartesian, g, h)
}

pub fn strong_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product(ProductKind::Strong, g, h)
}

pub fn corona_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product(ProductKind::Corona, g, h)
}

pub fn join(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    product(ProductKind::Join, g, h)
}

/// Edge count predicted by the product definition.
pub fn expected_edge_count(kind: ProductKind, g: &Graph, h: &Graph) -> usize {
    let (a, b, ea, eb) = (g.order(), h.order(), g.edge_count(), h.edge_count());
    match kind {
        ProductKind::Cartesian => a * eb + b * ea,
        ProductKind::Strong => a * eb + b * ea + 2 * ea * eb,
        ProductKind::Corona => ea + a * eb + a * b,
        ProductKind::Join => ea + eb + a * b,
    }
}
