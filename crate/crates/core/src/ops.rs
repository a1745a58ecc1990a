/// The binary operations of a lattice over some element representation.
///
/// Implementations may panic if handed elements that do not belong to the
/// lattice; callers validate elements when they construct them.
pub trait Lattice {
    type Elem: Clone + Eq;

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.meet(a, b) == *a
    }
}

/// The weak order on permutations of `{1..k}` in clopen-set form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Permutohedron {
    pub k: usize,
}

impl Lattice for Permutohedron {
    type Elem = crate::perm::InversionSet;

    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.join(b).expect("operands are clopen sets over the same k")
    }

    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.meet(b).expect("operands are clopen sets over the same k")
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.is_subset(b)
    }
}
