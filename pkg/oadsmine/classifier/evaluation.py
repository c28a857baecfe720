#! /usr/bin/env python3

# standard modules
import logging
import dataclasses

# third party modules
import numpy as np
from sklearn.metrics import accuracy_score, confusion_matrix, precision_recall_fscore_support
from sklearn.model_selection import StratifiedKFold

# self-defined modules
from oadsmine.shared.errors import TrainingError
from oadsmine.classifier.labels import Label
from oadsmine.classifier.linearmodel import TrainingConfig, train, predict


# OADS first, so the confusion matrix reads [[tp, fn], [fp, tn]]
LABEL_ORDER = [Label.OADS.value, Label.NON_OADS.value]


@dataclasses.dataclass(frozen=True)
class LabelMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclasses.dataclass(frozen=True)
class Metrics:
    """OADS is the positive class of the confusion matrix"""
    total: int
    accuracy: float
    true_positive: int
    false_positive: int
    false_negative: int
    true_negative: int
    per_label: dict

    def as_dict(self):
        data = dataclasses.asdict(self)
        data['per_label'] = {label.value: dataclasses.asdict(metrics)
                             for label, metrics in self.per_label.items()}
        return data

    def summary(self):
        lines = ["examples: {}  accuracy: {:.4f}".format(self.total, self.accuracy)]
        for label, metrics in self.per_label.items():
            lines.append("{:8s} precision {:.4f}  recall {:.4f}  f1 {:.4f}  support {}".format(
                label.value, metrics.precision, metrics.recall, metrics.f1, metrics.support))
        lines.append("confusion (OADS positive): tp {} fp {} fn {} tn {}".format(
            self.true_positive, self.false_positive, self.false_negative, self.true_negative))
        return "\n".join(lines)


def evaluate_predictions(gold, predicted):
    if not gold:
        raise TrainingError("no labeled examples to evaluate")
    if len(gold) != len(predicted):
        raise TrainingError("{} gold labels but {} predictions".format(len(gold), len(predicted)))
    y_true = [label.value for label in gold]
    y_pred = [label.value for label in predicted]

    (tp, fn), (fp, tn) = confusion_matrix(y_true, y_pred, labels=LABEL_ORDER)
    precision, recall, f1, support = precision_recall_fscore_support(
        y_true, y_pred, labels=LABEL_ORDER, zero_division=0)
    per_label = {
        Label(value): LabelMetrics(float(precision[i]), float(recall[i]), float(f1[i]), int(support[i]))
        for i, value in enumerate(LABEL_ORDER)
    }
    return Metrics(
        total=len(y_true),
        accuracy=float(accuracy_score(y_true, y_pred)),
        true_positive=int(tp),
        false_positive=int(fp),
        false_negative=int(fn),
        true_negative=int(tn),
        per_label=per_label,
    )


def evaluate(model, examples):
    """metrics of the learned model alone on labeled examples"""
    gold = [example.label for example in examples]
    predicted = [predict(model, example).label for example in examples]
    return evaluate_predictions(gold, predicted)


def fold_assignment(examples, folds, seed):
    """stratified fold index per example"""
    labels = np.array([example.label.value for example in examples])
    splitter = StratifiedKFold(n_splits=folds, shuffle=True, random_state=seed)
    assignment = [0] * len(examples)
    try:
        for fold, (_, test_index) in enumerate(splitter.split(np.zeros(len(labels)), labels)):
            for index in test_index:
                assignment[index] = fold
    except ValueError as exc:
        raise TrainingError("cannot split {} example(s) into {} folds: {}".format(len(examples), folds, exc))
    return assignment


@dataclasses.dataclass(frozen=True)
class CrossValidation:
    metrics: Metrics
    fold_accuracies: tuple

    @property
    def mean_accuracy(self):
        return float(np.mean(self.fold_accuracies))


def cross_validate(examples, config=None, featurizer_config=None, folds=5):
    """k-fold held-out evaluation; predictions of all folds are pooled into one Metrics"""
    config = config or TrainingConfig()
    if folds < 2:
        raise TrainingError("cross-validation needs at least 2 folds")
    if not examples:
        raise TrainingError("no labeled examples to cross-validate")
    assignment = fold_assignment(examples, folds, config.seed)

    gold, predicted, fold_accuracies = [], [], []
    for fold in range(folds):
        train_set = [example for example, f in zip(examples, assignment) if f != fold]
        test_set = [example for example, f in zip(examples, assignment) if f == fold]
        if not test_set:
            continue
        model = train(train_set, config, featurizer_config)
        fold_gold = [example.label for example in test_set]
        fold_predicted = [predict(model, example).label for example in test_set]
        fold_metrics = evaluate_predictions(fold_gold, fold_predicted)
        fold_accuracies.append(fold_metrics.accuracy)
        gold.extend(fold_gold)
        predicted.extend(fold_predicted)
        logging.getLogger().info("fold {}/{}: accuracy {:.4f} on {} example(s)".format(
            fold + 1, folds, fold_metrics.accuracy, len(test_set)))
    return CrossValidation(evaluate_predictions(gold, predicted), tuple(fold_accuracies))
