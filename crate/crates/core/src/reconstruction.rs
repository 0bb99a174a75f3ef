//! Decks of vertex-deleted subgraphs, and what a deck reveals about the
//! graph it came from: the edge count, the degree sequence and the
//! (unlabeled) NDL.
//!
//! Every edge survives in all cards but the two missing one of its ends,
//! so the edge total over the deck is `(n - 2) |E|`. A card's missing
//! vertex has degree `|E|` minus the card's edge count. Deleting that
//! vertex lowers the degree of each of its neighbors by one, which is
//! visible by comparing the card's degrees with the degree sequence of
//! the whole graph.

use thiserror::Error;

use crate::graph::{degree_sequence, induced_subgraph, Graph};
use crate::tableau::{canonicalize, Tableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeckError {
    #[error("a deck needs at least 3 cards, got {0}")]
    TooSmall(usize),
    #[error("card {card} has {found} vertices, expected {expected}")]
    CardSize {
        card: usize,
        found: usize,
        expected: usize,
    },
    #[error("edge total {total} is not divisible by {divisor}")]
    NotDivisible { total: usize, divisor: usize },
    #[error("card {0} has more edges than the whole graph")]
    NegativeDegree(usize),
    #[error("card {0} does not match the recovered degree sequence")]
    Inconsistent(usize),
}

/// The multiset of induced subgraphs on `n - 1` vertices; card `i` is the
/// graph with vertex `i` deleted, relabeled in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deck {
    pub cards: Vec<Graph>,
}

impl Deck {
    pub fn new(cards: Vec<Graph>) -> Self {
        Deck { cards }
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    fn check_shape(&self) -> Result<(), DeckError> {
        let n = self.cards.len();
        if n < 3 {
            return Err(DeckError::TooSmall(n));
        }
        for (card, g) in self.cards.iter().enumerate() {
            if g.vertex_count() != n - 1 {
                return Err(DeckError::CardSize {
                    card,
                    found: g.vertex_count(),
                    expected: n - 1,
                });
            }
        }
        Ok(())
    }
}

pub fn deck_of(g: &Graph) -> Deck {
    let n = g.vertex_count();
    let cards = (0..n)
        .map(|v| {
            let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
            induced_subgraph(g, &rest).expect("vertices are in range").0
        })
        .collect();
    Deck { cards }
}

pub fn edge_count_from_deck(d: &Deck) -> Result<usize, DeckError> {
    d.check_shape()?;
    let total: usize = d.cards.iter().map(Graph::edge_count).sum();
    let divisor = d.cards.len() - 2;
    if !total.is_multiple_of(divisor) {
        return Err(DeckError::NotDivisible { total, divisor });
    }
    Ok(total / divisor)
}

/// Degree of the missing vertex of each card, indexed by card.
pub fn degrees_from_deck(d: &Deck) -> Result<Vec<usize>, DeckError> {
    let m = edge_count_from_deck(d)?;
    d.cards
        .iter()
        .enumerate()
        .map(|(i, card)| {
            m.checked_sub(card.edge_count())
                .ok_or(DeckError::NegativeDegree(i))
        })
        .collect()
}

/// The degree sequence of the graph behind the deck, descending.
pub fn degree_sequence_from_deck(d: &Deck) -> Result<Vec<usize>, DeckError> {
    let mut degrees = degrees_from_deck(d)?;
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    Ok(degrees)
}

/// Neighbor degrees of the missing vertex of one card. `rest` is the
/// degree sequence of the graph with one copy of the missing degree
/// removed, `card` the card's degree sequence, both descending. Paired
/// position by position they differ by 0 or 1, and the positions that
/// differ by 1 are the neighbors.
fn missing_row(rest: &[usize], card: &[usize], missing: usize) -> Option<Vec<usize>> {
    if rest.len() != card.len() {
        return None;
    }
    let mut row = Vec::with_capacity(missing);
    for (&r, &c) in rest.iter().zip(card) {
        match r.checked_sub(c) {
            Some(0) => {}
            Some(1) => row.push(r),
            _ => return None,
        }
    }
    (row.len() == missing).then_some(row)
}

/// The canonical NDL of the graph behind the deck.
pub fn ndl_from_deck(d: &Deck) -> Result<Tableau, DeckError> {
    let missing = degrees_from_deck(d)?;
    let mut whole = missing.clone();
    whole.sort_unstable_by(|a, b| b.cmp(a));
    let mut rows = Vec::with_capacity(missing.len());
    for (i, (card, &m)) in d.cards.iter().zip(&missing).enumerate() {
        let mut rest = whole.clone();
        let at = rest
            .iter()
            .position(|&x| x == m)
            .expect("m is in the multiset");
        rest.remove(at);
        let row =
            missing_row(&rest, &degree_sequence(card), m).ok_or(DeckError::Inconsistent(i))?;
        rows.push(row);
    }
    Ok(canonicalize(&Tableau::new(rows)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{pendant_c4, pendant_c4_ndl};

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn decks() {
        let k3 = deck_of(&Graph::complete(3));
        assert_eq!(k3.cards, vec![Graph::complete(2); 3]);
        let p3 = deck_of(&p3());
        assert_eq!(
            p3.cards,
            vec![Graph::complete(2), Graph::empty(2), Graph::complete(2)]
        );
        assert_eq!(deck_of(&Graph::empty(1)).cards, vec![Graph::empty(0)]);
    }

    #[test]
    fn edge_counts() {
        assert_eq!(edge_count_from_deck(&deck_of(&Graph::complete(3))), Ok(3));
        assert_eq!(edge_count_from_deck(&deck_of(&pendant_c4())), Ok(5));
        assert_eq!(edge_count_from_deck(&deck_of(&Graph::empty(3))), Ok(0));
        assert_eq!(
            edge_count_from_deck(&deck_of(&Graph::complete(2))),
            Err(DeckError::TooSmall(2))
        );
        // three edges over a 4-card deck: 3 is not divisible by 2
        let odd = Deck::new(vec![
            Graph::complete(3),
            Graph::empty(3),
            Graph::empty(3),
            Graph::empty(3),
        ]);
        assert_eq!(
            edge_count_from_deck(&odd),
            Err(DeckError::NotDivisible {
                total: 3,
                divisor: 2
            })
        );
        let ragged = Deck::new(vec![Graph::empty(2), Graph::empty(2), Graph::empty(3)]);
        assert!(matches!(
            edge_count_from_deck(&ragged),
            Err(DeckError::CardSize { card: 2, .. })
        ));
    }

    #[test]
    fn degrees() {
        assert_eq!(
            degree_sequence_from_deck(&deck_of(&pendant_c4())),
            Ok(vec![3, 2, 2, 2, 1])
        );
        assert_eq!(
            degree_sequence_from_deck(&deck_of(&Graph::complete(4))),
            Ok(vec![3; 4])
        );
        assert_eq!(degrees_from_deck(&deck_of(&p3())), Ok(vec![1, 2, 1]));
        // 4 edges over the deck make a 2-edge graph, but card 0 holds 3
        let edge = Graph::from_edges(3, [(0, 1)]).unwrap();
        let bad = Deck::new(vec![
            Graph::complete(3),
            Graph::empty(3),
            Graph::empty(3),
            edge,
        ]);
        assert_eq!(degrees_from_deck(&bad), Err(DeckError::NegativeDegree(0)));
    }

    #[test]
    fn ndls() {
        assert_eq!(ndl_from_deck(&deck_of(&pendant_c4())), Ok(pendant_c4_ndl()));
        assert_eq!(
            ndl_from_deck(&deck_of(&Graph::complete(3))),
            Ok(Tableau::new(vec![vec![2, 2]; 3]))
        );
        assert_eq!(
            ndl_from_deck(&deck_of(&Graph::empty(3))),
            Ok(Tableau::new(vec![vec![]; 3]))
        );
    }

    #[test]
    fn inconsistent_deck() {
        // 6 edges over the deck make a 3-edge graph with missing degrees
        // 0, 0, 3, 3; a degree-0 vertex cannot leave a triangle behind
        let deck = Deck::new(vec![
            Graph::complete(3),
            Graph::complete(3),
            Graph::empty(3),
            Graph::empty(3),
        ]);
        assert_eq!(degrees_from_deck(&deck), Ok(vec![0, 0, 3, 3]));
        assert_eq!(ndl_from_deck(&deck), Err(DeckError::Inconsistent(0)));
    }
}
