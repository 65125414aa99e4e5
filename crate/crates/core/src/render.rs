//! ASCII and TikZ renderings of a permutation's diagrams.
//!
//! Both targets use matrix coordinates with row 1 at the top. Dots sit at
//! `(w(j), j)`; lasers run north and east from each dot.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::str::FromStr;

use crate::cells::{Cell, CellSet};
use crate::diagrams::{bundle, DiagramBundle};
use crate::error::{Error, Result};
use crate::graph::graph_of;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderTarget {
    Ascii,
    Tikz,
}

impl FromStr for RenderTarget {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ascii" => Ok(RenderTarget::Ascii),
            "tikz" => Ok(RenderTarget::Tikz),
            other => Err(format!("unknown render target {other:?}; expected ascii or tikz")),
        }
    }
}

/// Drawing layers. Declaration order is also the legend order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Dots,
    Lasers,
    OppositeRothe,
    Essential,
    Dominant,
    Southwest,
    L,
    LPrime,
    Graph,
}

impl Layer {
    pub const ALL: [Layer; 9] = [
        Layer::Dots,
        Layer::Lasers,
        Layer::OppositeRothe,
        Layer::Essential,
        Layer::Dominant,
        Layer::Southwest,
        Layer::L,
        Layer::LPrime,
        Layer::Graph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Layer::Dots => "dots",
            Layer::Lasers => "lasers",
            Layer::OppositeRothe => "opposite_rothe",
            Layer::Essential => "essential",
            Layer::Dominant => "dominant",
            Layer::Southwest => "southwest",
            Layer::L => "l",
            Layer::LPrime => "l_prime",
            Layer::Graph => "graph",
        }
    }

    fn marker(self) -> Option<char> {
        match self {
            Layer::OppositeRothe => Some('#'),
            Layer::Essential => Some('@'),
            Layer::Dominant => Some('D'),
            Layer::Southwest => Some('s'),
            Layer::L => Some('L'),
            Layer::LPrime => Some('P'),
            _ => None,
        }
    }

    fn tikz_fill(self) -> Option<&'static str> {
        match self {
            Layer::Southwest => Some("gray!20"),
            Layer::L => Some("green!20"),
            Layer::LPrime => Some("yellow!30"),
            Layer::OppositeRothe => Some("cyan!20"),
            Layer::Dominant => Some("orange!30"),
            Layer::Essential => Some("blue!40"),
            _ => None,
        }
    }

    fn cells(self, b: &DiagramBundle) -> Option<&CellSet> {
        match self {
            Layer::OppositeRothe => Some(&b.opposite_rothe),
            Layer::Essential => Some(&b.essential),
            Layer::Dominant => Some(&b.dominant),
            Layer::Southwest => Some(&b.southwest),
            Layer::L => Some(&b.l_diagram),
            Layer::LPrime => Some(&b.l_prime),
            _ => None,
        }
    }
}

impl FromStr for Layer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "dots" => Layer::Dots,
            "lasers" => Layer::Lasers,
            "opposite_rothe" | "rothe" => Layer::OppositeRothe,
            "essential" | "ess" => Layer::Essential,
            "dominant" | "dom" => Layer::Dominant,
            "southwest" | "sw" => Layer::Southwest,
            "l" => Layer::L,
            "l_prime" | "lprime" => Layer::LPrime,
            "graph" => Layer::Graph,
            _ => return Err(Error::UnknownLayer(s.to_string())),
        })
    }
}

/// Filled-cell precedence, strongest first.
const FILL_ORDER: [Layer; 6] =
    [Layer::Essential, Layer::Dominant, Layer::OppositeRothe, Layer::LPrime, Layer::L, Layer::Southwest];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    target: RenderTarget,
    show: BTreeSet<Layer>,
    cell_labels: bool,
}

impl RenderSpec {
    pub fn new(target: RenderTarget, show: impl IntoIterator<Item = Layer>, cell_labels: bool) -> Result<Self> {
        let show: BTreeSet<Layer> = show.into_iter().collect();
        if show.is_empty() {
            return Err(Error::NoLayers);
        }
        Ok(RenderSpec { target, show, cell_labels })
    }

    /// Parses a comma-separated layer list such as `dots,lasers,rothe`.
    pub fn parse_layers(list: &str) -> Result<Vec<Layer>> {
        list.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
    }

    pub fn layers(&self) -> impl Iterator<Item = Layer> + '_ {
        self.show.iter().copied()
    }

    fn has(&self, layer: Layer) -> bool {
        self.show.contains(&layer)
    }

    fn has_grid(&self) -> bool {
        self.show.iter().any(|&l| l != Layer::Graph)
    }
}

pub fn render(w: &Permutation, spec: &RenderSpec) -> String {
    let b = bundle(w);
    match spec.target {
        RenderTarget::Ascii => ascii(&b, spec),
        RenderTarget::Tikz => tikz(&b, spec),
    }
}

fn laser_at(w: &Permutation, cell: Cell) -> (bool, bool) {
    // Vertical beam: a dot lower in the same column. Horizontal: a dot further
    // west in the same row.
    let vertical = w.at(cell.col) > cell.row;
    let horizontal = w.inverse().at(cell.row) < cell.col;
    (vertical, horizontal)
}

fn ascii(b: &DiagramBundle, spec: &RenderSpec) -> String {
    let w = &b.w;
    let n = w.n();
    let mut out = String::new();
    writeln!(out, "w = {w}  (n = {n})").unwrap();
    if spec.has_grid() {
        let width = n.to_string().len();
        write!(out, "{:width$} ", "").unwrap();
        for j in 1..=n {
            write!(out, " {j:>width$}").unwrap();
        }
        out.push('\n');
        for i in 1..=n {
            write!(out, "{i:>width$} ").unwrap();
            for j in 1..=n {
                let cell = Cell::new(i, j);
                let mark = ascii_mark(b, spec, cell);
                write!(out, " {mark:>width$}").unwrap();
            }
            out.push('\n');
        }
        let legend: Vec<String> = spec
            .layers()
            .filter_map(|l| match l {
                Layer::Dots => Some("● dot".to_string()),
                Layer::Lasers => Some("|-+ laser".to_string()),
                Layer::Graph => None,
                other => other.marker().map(|m| format!("{m} {}", other.name())),
            })
            .collect();
        if !legend.is_empty() {
            writeln!(out, "legend: {}", legend.join(", ")).unwrap();
        }
        if spec.cell_labels {
            for layer in spec.layers() {
                if let Some(cells) = layer.cells(b) {
                    let list: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
                    writeln!(out, "{} ({}): {}", layer.name(), cells.len(), list.join(" ")).unwrap();
                }
            }
        }
    }
    if spec.has(Layer::Graph) {
        let g = graph_of(&b.l_diagram);
        let bar = |c: usize| format!("{c}\u{0304}");
        let rows: Vec<String> = g.rows.iter().map(usize::to_string).collect();
        let cols: Vec<String> = g.cols.iter().map(|&c| bar(c)).collect();
        writeln!(
            out,
            "G(w): {} vertices, {} edges, {} components",
            g.vertex_count(),
            g.edge_count(),
            g.component_count()
        )
        .unwrap();
        writeln!(out, "rows: {{{}}}  cols: {{{}}}", rows.join(","), cols.join(",")).unwrap();
        let edges: Vec<String> = g.edges.iter().map(|&(a, c)| format!("{a}->{}", bar(c))).collect();
        writeln!(out, "edges: {}", edges.join(" ")).unwrap();
    }
    out
}

fn ascii_mark(b: &DiagramBundle, spec: &RenderSpec, cell: Cell) -> String {
    let w = &b.w;
    if spec.has(Layer::Dots) && w.at(cell.col) == cell.row {
        return "●".into();
    }
    for layer in FILL_ORDER {
        if spec.has(layer) && layer.cells(b).is_some_and(|c| c.contains(cell)) {
            return layer.marker().unwrap().to_string();
        }
    }
    if spec.has(Layer::Lasers) {
        if w.at(cell.col) == cell.row {
            return "+".into();
        }
        match laser_at(w, cell) {
            (true, true) => return "+".into(),
            (true, false) => return "|".into(),
            (false, true) => return "-".into(),
            _ => {}
        }
    }
    ".".into()
}

const UNIT: f64 = 0.5;

fn tikz(b: &DiagramBundle, spec: &RenderSpec) -> String {
    let w = &b.w;
    let n = w.n();
    let side = n as f64 * UNIT;
    let x = |col: usize| (col as f64 - 0.5) * UNIT;
    let y = |row: usize| (n as f64 - row as f64 + 0.5) * UNIT;
    let mut out = String::new();
    out.push_str("\\documentclass[tikz]{standalone}\n\\begin{document}\n");
    writeln!(out, "% w = {w}").unwrap();
    out.push_str("\\begin{tikzpicture}[scale=1.3]\n");
    if spec.has_grid() {
        for layer in FILL_ORDER.iter().rev() {
            if !spec.has(*layer) {
                continue;
            }
            let cells = layer.cells(b).unwrap();
            if cells.is_empty() {
                continue;
            }
            writeln!(out, "\\fill[{}]", layer.tikz_fill().unwrap()).unwrap();
            for c in cells.iter() {
                writeln!(
                    out,
                    "  ({:.2}, {:.2}) rectangle ({:.2}, {:.2})",
                    (c.col - 1) as f64 * UNIT,
                    (n - c.row) as f64 * UNIT,
                    c.col as f64 * UNIT,
                    (n - c.row + 1) as f64 * UNIT
                )
                .unwrap();
            }
            out.push_str("  ;\n");
        }
        writeln!(out, "\\draw[step={UNIT}] (0,0) grid ({side:.2},{side:.2});").unwrap();
        if spec.cell_labels {
            let mut labelled = BTreeSet::new();
            for layer in FILL_ORDER {
                if spec.has(layer) {
                    labelled.extend(layer.cells(b).unwrap().iter());
                }
            }
            for c in labelled {
                writeln!(out, "\\node at ({:.2}, {:.2}) {{\\scriptsize $({},{})$}};", x(c.col), y(c.row), c.row, c.col)
                    .unwrap();
            }
        }
        if spec.has(Layer::Dots) || spec.has(Layer::Lasers) {
            out.push_str("\\draw[draw=red]\n");
            for j in 1..=n {
                let i = w.at(j);
                let (px, py) = (x(j), y(i));
                let dot = if spec.has(Layer::Dots) { " node {$\\bullet$}" } else { "" };
                if spec.has(Layer::Lasers) {
                    writeln!(out, "  ({px:.2}, {side:.2}) -- ({px:.2}, {py:.2}){dot} -- ({side:.2}, {py:.2})").unwrap();
                } else {
                    writeln!(out, "  ({px:.2}, {py:.2}){dot}").unwrap();
                }
            }
            out.push_str("  ;\n");
        }
    }
    if spec.has(Layer::Graph) {
        let g = graph_of(&b.l_diagram);
        let left = if spec.has_grid() { side + 1.0 } else { 0.0 };
        let right = left + 2.0;
        let top = |k: usize| side - k as f64 * UNIT;
        out.push_str("% G(w)\n");
        for (k, r) in g.rows.iter().enumerate() {
            writeln!(out, "\\node[circle,draw,inner sep=1pt] (r{r}) at ({left:.2}, {:.2}) {{${r}$}};", top(k)).unwrap();
        }
        for (k, c) in g.cols.iter().enumerate() {
            writeln!(
                out,
                "\\node[circle,draw,inner sep=1pt] (c{c}) at ({right:.2}, {:.2}) {{$\\overline{{{c}}}$}};",
                top(k)
            )
            .unwrap();
        }
        for (a, c) in &g.edges {
            writeln!(out, "\\draw[->] (r{a}) -- (c{c});").unwrap();
        }
    }
    out.push_str("\\end{tikzpicture}\n\\end{document}\n");
    out
}
