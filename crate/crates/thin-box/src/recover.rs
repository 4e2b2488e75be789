use thin_ceo::{solve_ceo, CeoOutcome, ClassOrder};
use thin_graph::{Partition, Representation};
use thin_order::ConsistencyMode;

use crate::{check_bi_semi_proper, check_blocking, check_diagonal, BoxError, BoxModel, Diagonal, Side};

/// A representation of the model's intersection graph: lower-diagonal
/// boxes form class 0, upper ones class 1, each class ordered by corner,
/// merged by the order-extension solver.
///
/// Consistent mode needs a blocking 2-diagonal model; strong mode a
/// bi-semi-proper weakly 2-diagonal one.
///
/// # Panics
/// If the merge is infeasible despite the preconditions, which would mean
/// a predicate is wrong.
pub fn recover_representation(m: &BoxModel, mode: ConsistencyMode) -> Result<Representation, BoxError> {
    let report = check_diagonal(m);
    match mode {
        ConsistencyMode::Consistent => {
            if report.diagonal != Diagonal::TwoDiagonal {
                return Err(BoxError::Precondition { required: "2-diagonal", witness: report.witness });
            }
            if let Some(w) = check_blocking(m)? {
                return Err(BoxError::Precondition { required: "blocking", witness: Some(w) });
            }
        }
        ConsistencyMode::Strong => {
            if report.diagonal == Diagonal::Neither {
                return Err(BoxError::Precondition { required: "weakly 2-diagonal", witness: report.witness });
            }
            if let Some(w) = check_bi_semi_proper(m)? {
                return Err(BoxError::Precondition { required: "bi-semi-proper", witness: Some(w) });
            }
        }
    }
    let g = m.intersection_graph();
    let labels: Vec<usize> = report.sides.iter().map(|&s| usize::from(s == Side::Upper)).collect();
    let partition = Partition::new(labels)?;
    let per_class = partition
        .classes()
        .into_iter()
        .map(|mut c| {
            c.sort_by_key(|&v| m.boxes[v].x2);
            c
        })
        .collect();
    let porder = ClassOrder::new(&partition, per_class).expect("classes come from the partition");
    match solve_ceo(&g, &partition, &porder, mode) {
        Ok(CeoOutcome::Extended(order)) => Ok(Representation::new(order, partition)?),
        Ok(CeoOutcome::Infeasible { cycle }) => panic!("model passed its predicates but the order digraph has cycle {cycle:?}"),
        Err(e) => panic!("model passed its predicates but {e}"),
    }
}
