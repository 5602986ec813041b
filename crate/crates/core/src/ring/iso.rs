use super::{Elem, FiniteRing};

#[derive(Clone)]
struct Partial {
    forward: Vec<Option<Elem>>,
    used: Vec<bool>,
    assigned: Vec<(Elem, Elem)>,
}

impl Partial {
    /// Records `x -> y` and everything it forces through sums and products
    /// with already assigned pairs. Returns false on contradiction.
    fn assign(&mut self, a: &FiniteRing, b: &FiniteRing, x: Elem, y: Elem) -> bool {
        let mut pending = vec![(x, y)];
        while let Some((x, y)) = pending.pop() {
            match self.forward[x.index()] {
                Some(existing) if existing == y => continue,
                Some(_) => return false,
                None if self.used[y.index()] => return false,
                None => {}
            }
            self.forward[x.index()] = Some(y);
            self.used[y.index()] = true;
            self.assigned.push((x, y));
            for &(u, v) in &self.assigned {
                pending.push((a.add(x, u), b.add(y, v)));
                pending.push((a.mul(x, u), b.mul(y, v)));
            }
        }
        true
    }
}

/// Exhaustive search for a ring isomorphism `a -> b`, returned as the image
/// of each code of `a`. Backtracking with forced propagation; intended for
/// small rings.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<Elem>> {
    if a.order() != b.order() {
        return None;
    }
    let n = a.order();
    let mut start = Partial { forward: vec![None; n], used: vec![false; n], assigned: Vec::new() };
    if !start.assign(a, b, a.zero(), b.zero()) || !start.assign(a, b, a.one(), b.one()) {
        return None;
    }
    search(a, b, start)
}

fn search(a: &FiniteRing, b: &FiniteRing, state: Partial) -> Option<Vec<Elem>> {
    let Some(x) = a.elements().find(|x| state.forward[x.index()].is_none()) else {
        return Some(state.forward.into_iter().map(|y| y.expect("complete map")).collect());
    };
    for y in b.elements().filter(|y| !state.used[y.index()]) {
        let mut next = state.clone();
        if next.assign(a, b, x, y) {
            if let Some(found) = search(a, b, next) {
                return Some(found);
            }
        }
    }
    None
}
