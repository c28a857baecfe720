#! /usr/bin/env python3
"""L2-regularized logistic regression over sparse context and URI features.

Training is full-batch gradient descent from zero weights. Scores and
gradients are accumulated with numpy.bincount, which sums strictly in input
order, so a given example list always yields the identical model.
"""

# standard modules
import os
import json
import math
import logging
import dataclasses

# third party modules
import numpy as np

# self-defined modules
from oadsmine.shared.errors import ConfigError, ModelFormatError, TrainingError
from oadsmine.shared.filestorage import write_text
from oadsmine.shared.stdscript import typed_value
from oadsmine.classifier.labels import Classification, Label, Provenance
from oadsmine.classifier.featurizer import Featurizer


FORMAT_VERSION = 1


@dataclasses.dataclass(frozen=True)
class TrainingConfig:
    learning_rate: float = 0.1
    iterations: int = 500
    l2: float = 1e-3
    seed: int = 42
    min_token_count: int = 1
    threshold: float = 0.5

    @classmethod
    def from_config(cls, config):
        return cls(
            learning_rate=typed_value(config, 'TRAINING', 'learning_rate', float),
            iterations=typed_value(config, 'TRAINING', 'iterations', int),
            l2=typed_value(config, 'TRAINING', 'l2', float),
            seed=typed_value(config, 'TRAINING', 'seed', int),
            min_token_count=typed_value(config, 'TRAINING', 'min_token_count', int),
            threshold=typed_value(config, 'CLASSIFIER', 'threshold', float),
        )

    def __post_init__(self):
        if not 0.0 < self.threshold < 1.0:
            raise ConfigError("threshold must lie in (0, 1), got {}".format(self.threshold))
        if self.iterations < 0 or self.learning_rate <= 0 or self.l2 < 0:
            raise ConfigError("invalid training hyperparameters")


def sigmoid(value):
    # tanh form does not overflow for large |value|
    return 0.5 * (1.0 + math.tanh(0.5 * value))


@dataclasses.dataclass(frozen=True, eq=False)
class TrainedModel:
    vocabulary: dict
    weights: np.ndarray
    bias: float
    threshold: float
    featurizer_config: dict
    training_config: dict
    format_version: int = FORMAT_VERSION

    def __post_init__(self):
        featurizer = Featurizer(self.featurizer_config)
        if len(self.weights) != len(self.vocabulary) + len(featurizer.flag_names):
            raise ModelFormatError("weight vector length {} does not match vocabulary {} plus {} flags".format(
                len(self.weights), len(self.vocabulary), len(featurizer.flag_names)))
        self.weights.flags.writeable = False
        # derived lookup tables
        object.__setattr__(self, "featurizer", featurizer)
        object.__setattr__(self, "_flag_index", {
            name: len(self.vocabulary) + i for i, name in enumerate(featurizer.flag_names)})

    def index_of(self, name):
        if name.startswith("uri:"):
            return self._flag_index.get(name)
        return self.vocabulary.get(name)

    def vectorize(self, features):
        """(index, value) pairs in index order; unknown features are dropped"""
        pairs = []
        for name, value in features.items():
            index = self.index_of(name)
            if index is not None:
                pairs.append((index, float(value)))
        return sorted(pairs)

    def decision(self, features):
        total = self.bias
        for index, value in self.vectorize(features):
            total += float(self.weights[index]) * value
        return total

    def score(self, context, uri):
        return sigmoid(self.decision(self.featurizer.featurize(context, uri)))

    def to_dict(self):
        tokens = [None] * len(self.vocabulary)
        for token, index in self.vocabulary.items():
            tokens[index] = token
        return {
            "format_version": self.format_version,
            "featurizer_config": self.featurizer_config,
            "training_config": self.training_config,
            "vocabulary": tokens,
            "weights": [float(weight) for weight in self.weights],
            "bias": float(self.bias),
            "threshold": float(self.threshold),
        }

    def dumps(self):
        # repr floats round-trip exactly through JSON
        return json.dumps(self.to_dict(), indent=1, sort_keys=True, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data):
        try:
            if data['format_version'] != FORMAT_VERSION:
                raise ModelFormatError("unsupported model format version {}".format(data['format_version']))
            vocabulary = {token: index for index, token in enumerate(data['vocabulary'])}
            if len(vocabulary) != len(data['vocabulary']):
                raise ModelFormatError("duplicate vocabulary tokens")
            return cls(
                vocabulary=vocabulary,
                weights=np.array(data['weights'], dtype=np.float64),
                bias=float(data['bias']),
                threshold=float(data['threshold']),
                featurizer_config=data['featurizer_config'],
                training_config=data['training_config'],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ModelFormatError("invalid model data: {}".format(exc))

    @classmethod
    def loads(cls, text):
        try:
            data = json.loads(text)
        except ValueError as exc:
            raise ModelFormatError("model file is not valid JSON: {}".format(exc))
        return cls.from_dict(data)

    def save(self, filename):
        write_text(filename, self.dumps())

    @classmethod
    def load(cls, filename):
        if not os.path.isfile(filename):
            raise ModelFormatError("model file {} not found".format(filename))
        with open(filename, encoding="utf-8") as model_file:
            return cls.loads(model_file.read())


def build_vocabulary(feature_maps, min_token_count=1):
    """sorted vocabulary of non-flag features seen in at least min_token_count examples"""
    document_counts = {}
    for features in feature_maps:
        for name in features:
            if not name.startswith("uri:"):
                document_counts[name] = document_counts.get(name, 0) + 1
    tokens = sorted(name for name, count in document_counts.items() if count >= min_token_count)
    return {token: index for index, token in enumerate(tokens)}


def train(examples, config=None, featurizer_config=None):
    """fit the linear model; needs at least one example of each label"""
    config = config or TrainingConfig()
    if not examples:
        raise TrainingError("no training examples")
    labels = set(example.label for example in examples)
    if labels != set(Label):
        raise TrainingError("training data needs both labels, found only {}".format(
            ", ".join(sorted(label.value for label in labels))))

    featurizer = Featurizer(featurizer_config)
    feature_maps = [featurizer.featurize(example.context, example.uri) for example in examples]
    vocabulary = build_vocabulary(feature_maps, config.min_token_count)

    # empty model only used for its index mapping
    dimension = len(vocabulary) + len(featurizer.flag_names)
    layout = TrainedModel(vocabulary, np.zeros(dimension), 0.0, config.threshold,
                          featurizer.config, dataclasses.asdict(config))

    # sparse design matrix in coordinate form, rows in example order
    rows, cols, vals = [], [], []
    for row, features in enumerate(feature_maps):
        for index, value in layout.vectorize(features):
            rows.append(row)
            cols.append(index)
            vals.append(value)
    rows = np.array(rows, dtype=np.int64)
    cols = np.array(cols, dtype=np.int64)
    vals = np.array(vals, dtype=np.float64)
    target = np.array([1.0 if example.label is Label.OADS else 0.0 for example in examples])
    count = len(examples)

    weights = np.zeros(dimension, dtype=np.float64)
    bias = 0.0
    for _ in range(config.iterations):
        margin = bias + np.bincount(rows, weights=vals * weights[cols], minlength=count)
        error = 0.5 * (1.0 + np.tanh(0.5 * margin)) - target
        gradient = np.bincount(cols, weights=vals * error[rows], minlength=dimension) / count
        gradient += config.l2 * weights
        weights = weights - config.learning_rate * gradient
        bias -= config.learning_rate * float(error.sum()) / count

    logging.getLogger().info("trained model on {} example(s), {} vocabulary token(s)".format(
        count, len(vocabulary)))
    return TrainedModel(vocabulary, weights, float(bias), config.threshold,
                        featurizer.config, dataclasses.asdict(config))


def predict(model, mention):
    """learned verdict for anything with context and uri attributes"""
    score = model.score(mention.context, mention.uri)
    label = Label.OADS if score >= model.threshold else Label.NON_OADS
    return Classification(label, Provenance.LEARNED, score)
