from lambdadl.evaluator.materialize import materialize_projection, materialize_query
from lambdadl.evaluator.outcomes import Done, EvalOutcome, Stepped, Stuck, StuckKind, StuckReport
from lambdadl.evaluator.run import evaluate
from lambdadl.evaluator.step import Stepper, step
from lambdadl.evaluator.trace import EvalTrace

__all__ = [
    "materialize_projection",
    "materialize_query",
    "Done",
    "EvalOutcome",
    "Stepped",
    "Stuck",
    "StuckKind",
    "StuckReport",
    "evaluate",
    "Stepper",
    "step",
    "EvalTrace",
]
