#! /usr/bin/env python3

# standard modules
import os
import enum
import logging
import dataclasses

# self-defined modules
from oadsmine.shared.errors import LabeledDataError


class Label(enum.Enum):
    OADS = "OADS"
    NON_OADS = "NonOADS"

    @classmethod
    def parse(cls, text):
        normalized = text.strip().replace("-", "").replace("_", "").lower()
        for label in cls:
            if label.value.lower() == normalized:
                return label
        raise ValueError("unknown label {!r}".format(text))


class Provenance(enum.Enum):
    HEURISTIC_PUBLISHER = "HeuristicPublisher"
    HEURISTIC_PDF = "HeuristicPdf"
    LEARNED = "Learned"


HEURISTIC_PROVENANCES = frozenset([Provenance.HEURISTIC_PUBLISHER, Provenance.HEURISTIC_PDF])


@dataclasses.dataclass(frozen=True)
class Classification:
    label: Label
    provenance: Provenance
    score: float

    def __post_init__(self):
        if self.provenance in HEURISTIC_PROVENANCES and \
                (self.label is not Label.NON_OADS or self.score != 0.0):
            raise ValueError("heuristic verdicts are NonOADS with score 0")
        if not 0.0 <= self.score <= 1.0:
            raise ValueError("score out of range: {}".format(self.score))


@dataclasses.dataclass(frozen=True)
class LabeledExample:
    context: str
    uri: str
    label: Label


def read_labeled_examples(filename):
    """read label<TAB>uri<TAB>context lines; '#' lines are comments"""
    if not os.path.isfile(filename):
        raise LabeledDataError("labeled file {} not found".format(filename))
    examples = []
    with open(filename, encoding="utf-8", newline="") as labeled_file:
        for line_number, line in enumerate(labeled_file, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            fields = line.split("\t", 2)
            if len(fields) != 3:
                raise LabeledDataError("expected label, uri and context", line_number)
            try:
                label = Label.parse(fields[0])
            except ValueError as exc:
                raise LabeledDataError(str(exc), line_number)
            if not fields[1].strip():
                raise LabeledDataError("empty uri", line_number)
            examples.append(LabeledExample(fields[2].strip(), fields[1].strip(), label))
    logging.getLogger().info("read {} labeled example(s) from {}".format(len(examples), filename))
    return examples
