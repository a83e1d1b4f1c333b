use graph_core::{mix64, subseed, NodeId};

/// Canonical id of an undirected edge: min * n + max. Injective over
/// unordered pairs and strictly below n^2, so it fits one runtime word.
pub fn edge_token(n: usize, u: NodeId, v: NodeId) -> u64 {
    debug_assert!(u != v && (u as usize) < n && (v as usize) < n);
    u.min(v) as u64 * n as u64 + u.max(v) as u64
}

pub fn token_edge(n: usize, token: u64) -> Option<(NodeId, NodeId)> {
    let (u, v) = (token / n as u64, token % n as u64);
    (u < v && v < n as u64).then_some((u as NodeId, v as NodeId))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SketchParams {
    pub n: usize,
    /// cell arithmetic is mod 2^w_bits so one field rides in one word
    pub w_bits: u32,
    pub levels: u32,
    pub rows: u32,
    pub seed: u64,
}

impl SketchParams {
    /// L = ceil(2 log2 n) levels x 4 rows.
    pub fn for_n(n: usize, w_bits: u32, seed: u64) -> SketchParams {
        let levels = 2 * (64 - (n.max(2) as u64 - 1).leading_zeros());
        SketchParams { n, w_bits, levels, rows: 4, seed }
    }

    fn mask(&self) -> u64 {
        if self.w_bits >= 64 { u64::MAX } else { (1u64 << self.w_bits) - 1 }
    }

    fn row_seed(&self, row: u32) -> u64 {
        subseed(self.seed, 0x1100 + row as u64)
    }

    /// Levels 0..=keep_depth(token) contain the edge: geometric survival.
    fn keep_depth(&self, row: u32, token: u64) -> u32 {
        mix64(self.row_seed(row) ^ token).trailing_zeros()
    }

    fn fingerprint(&self, token: u64) -> u64 {
        mix64(subseed(self.seed, 0xf1f1) ^ token) & self.mask()
    }
}

/// One cell: (count, id_sum, fp_sum), all mod 2^w. Wrapping keeps the
/// structure linear; a lone surviving edge decodes directly because its
/// token is below n^2 < 2^w.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Cell {
    pub count: u64,
    pub id_sum: u64,
    pub fp_sum: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L0Sketch {
    pub params: SketchParams,
    /// row-major: cells[level * rows + row]
    pub cells: Vec<Cell>,
}

impl L0Sketch {
    pub fn zero(params: SketchParams) -> L0Sketch {
        let cells = vec![Cell::default(); (params.levels * params.rows) as usize];
        L0Sketch { params, cells }
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(|c| *c == Cell::default())
    }

    fn add_token(&mut self, token: u64, negate: bool) {
        let mask = self.params.mask();
        let fp = self.params.fingerprint(token);
        let (c, t, f) = if negate {
            (1u64.wrapping_neg() & mask, token.wrapping_neg() & mask, fp.wrapping_neg() & mask)
        } else {
            (1, token, fp)
        };
        for row in 0..self.params.rows {
            let depth = self.params.keep_depth(row, token).min(self.params.levels - 1);
            for level in 0..=depth {
                let cell = &mut self.cells[(level * self.params.rows + row) as usize];
                cell.count = (cell.count + c) & mask;
                cell.id_sum = (cell.id_sum + t) & mask;
                cell.fp_sum = (cell.fp_sum + f) & mask;
            }
        }
    }

    /// Tries to decode a cell holding exactly one surviving edge, of either
    /// sign; the fingerprint guards against composite survivors.
    fn decode_cell(&self, cell: &Cell) -> Option<u64> {
        if *cell == Cell::default() {
            return None;
        }
        let mask = self.params.mask();
        for negate in [false, true] {
            let (count, token, fp) = if negate {
                (
                    cell.count.wrapping_neg() & mask,
                    cell.id_sum.wrapping_neg() & mask,
                    cell.fp_sum.wrapping_neg() & mask,
                )
            } else {
                (cell.count, cell.id_sum, cell.fp_sum)
            };
            if count == 1
                && token < (self.params.n * self.params.n) as u64
                && self.params.fingerprint(token) == fp
            {
                return Some(token);
            }
        }
        None
    }

    /// First decodable edge, scanning shallow levels first. `None` is exact
    /// for the all-zero sketch (an ungrowable component) and a retryable
    /// miss otherwise.
    pub fn sample_edge(&self) -> Option<(NodeId, NodeId)> {
        self.cells
            .iter()
            .find_map(|c| self.decode_cell(c))
            .and_then(|t| token_edge(self.params.n, t))
    }
}

/// Sketch of `v`'s signed incident-edge vector: +1 where v is the lower
/// endpoint, -1 where it is the higher, so summing over a component cancels
/// its internal edges exactly.
pub fn build_node_sketch(v: NodeId, neighbors: &[NodeId], params: SketchParams) -> L0Sketch {
    let mut s = L0Sketch::zero(params);
    for &u in neighbors {
        s.add_token(edge_token(params.n, v, u), v > u);
    }
    s
}

/// Cell-wise sum; shapes and seeds must agree.
pub fn merge(a: &L0Sketch, b: &L0Sketch) -> L0Sketch {
    assert_eq!(a.params, b.params, "sketch shape/seed mismatch");
    let mask = a.params.mask();
    let cells = a
        .cells
        .iter()
        .zip(&b.cells)
        .map(|(x, y)| Cell {
            count: (x.count + y.count) & mask,
            id_sum: (x.id_sum + y.id_sum) & mask,
            fp_sum: (x.fp_sum + y.fp_sum) & mask,
        })
        .collect();
    L0Sketch { params: a.params, cells }
}

/// Boundary-edge sample for a whole component (sum of member sketches).
pub fn sample_outgoing(component: &L0Sketch) -> Option<(NodeId, NodeId)> {
    component.sample_edge()
}
