"""Hybrid classification: heuristic rules first, the learned model for everything else."""

# self-defined modules
from oadsmine.classifier.heuristic import classify_heuristic
from oadsmine.classifier.linearmodel import predict


def classify_hybrid(mention, model, denylist):
    """heuristic verdicts short-circuit, the model is never consulted for them"""
    verdict = classify_heuristic(mention, denylist)
    if verdict is not None:
        return verdict
    return predict(model, mention)
