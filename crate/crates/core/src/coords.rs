//! Grid lines as nodes of a linked list, so that a fresh line can be
//! inserted directly next to any existing one in O(1). Integer coordinates
//! are assigned once at the end by walking the list.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Line(usize);

#[derive(Debug, Clone, Default)]
pub(crate) struct Axis {
    prev: Vec<usize>,
    next: Vec<usize>,
}

const NIL: usize = usize::MAX;

impl Axis {
    pub(crate) fn new() -> Self {
        Axis::default()
    }

    /// The first line ever created; later ones are placed relative to it.
    pub(crate) fn first(&mut self) -> Line {
        assert!(self.next.is_empty());
        self.prev.push(NIL);
        self.next.push(NIL);
        Line(0)
    }

    pub(crate) fn after(&mut self, l: Line) -> Line {
        let id = self.next.len();
        let nx = self.next[l.0];
        self.prev.push(l.0);
        self.next.push(nx);
        self.next[l.0] = id;
        if nx != NIL {
            self.prev[nx] = id;
        }
        Line(id)
    }

    pub(crate) fn before(&mut self, l: Line) -> Line {
        let id = self.next.len();
        let pv = self.prev[l.0];
        self.prev.push(pv);
        self.next.push(l.0);
        self.prev[l.0] = id;
        if pv != NIL {
            self.next[pv] = id;
        }
        Line(id)
    }

    /// Position of every line, indexed by line id.
    pub(crate) fn ranks(&self) -> Vec<i64> {
        let mut rank = vec![0; self.next.len()];
        let Some(mut cur) = (0..self.prev.len()).find(|&i| self.prev[i] == NIL) else {
            return rank;
        };
        let mut r = 0;
        while cur != NIL {
            rank[cur] = r;
            r += 1;
            cur = self.next[cur];
        }
        rank
    }

    pub(crate) fn rank_of(ranks: &[i64], l: Line) -> i64 {
        ranks[l.0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insertion_order() {
        let mut a = Axis::new();
        let x = a.first();
        let y = a.after(x);
        let z = a.before(y);
        let w = a.before(x);
        let r = a.ranks();
        let get = |l| Axis::rank_of(&r, l);
        assert_eq!((get(w), get(x), get(z), get(y)), (0, 1, 2, 3));
    }
}
