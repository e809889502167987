//! Monomial orders: degrevlex, lex, and block elimination orders.

use std::cmp::Ordering;

use crate::poly::Monomial;

/// A total order on monomials compatible with multiplication.
///
/// `Block { front }` is the elimination order that compares the first `front`
/// variables by degrevlex and breaks ties by degrevlex on the rest; any
/// monomial containing a front variable is larger than any monomial free of
/// them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block { front: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a.exps(), b.exps()),
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::Block { front } => {
                let (af, ar) = a.exps().split_at(front.min(a.exps().len()));
                let (bf, br) = b.exps().split_at(front.min(b.exps().len()));
                degrevlex(af, bf).then_with(|| degrevlex(ar, br))
            }
        }
    }
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal total degree: the last variable where they differ decides,
    // with the smaller exponent winning.
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let ord = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > x > y > 1 in two variables
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_three_vars() {
        // classic: x*z < y^2 under degrevlex with x > y > z
        let ord = MonomialOrder::DegRevLex;
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_basics() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 7])), Ordering::Greater);
    }

    #[test]
    fn block_elimination_property() {
        // any monomial with a front variable beats any monomial without
        let ord = MonomialOrder::Block { front: 1 };
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }
}
