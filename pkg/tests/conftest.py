"""Shared fixtures: fixture file paths and the synthetic labeled set.

The synthetic set has 100 examples per label. Both labels cycle through the
same sentence templates, so function words are equally frequent in both
classes and only content words, hosts and paths carry the label. It shares
no host or domain with labeled_sentences.tsv, and of that file's words only
the label cue words occur in one class alone.
"""

# standard modules
import os
import random
import logging

# third party modules
import pytest

# self-defined modules
from oadsmine.classifier.labels import Label, LabeledExample, read_labeled_examples
from oadsmine.classifier.linearmodel import train


DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

TEMPLATES = [
    "The {noun} is available at {uri}.",
    "All {noun} were {verb} at {uri}.",
    "This {noun} can be {verb} at {uri}.",
    "Our {noun} and {noun2} are {verb} by the authors at {uri}.",
    "The {noun} that we {verb} is at {uri}.",
    "See {uri} for the {noun}.",
    "Further {noun} are {verb} in {uri}.",
    "The {noun} {verb} for this work can be found at {uri}.",
]

WORDS = {
    Label.OADS: {
        "noun": ["dataset", "data", "code", "codebase", "software", "toolkit"],
        "verb": ["developed", "released", "archived", "deposited", "hosted"],
    },
    Label.NON_OADS: {
        "noun": ["article", "video", "talk", "slides", "interview", "blog"],
        "verb": ["seen", "acknowledged", "discussed", "reported", "watched"],
    },
}

CUE_WORDS = frozenset(["dataset", "data", "code", "codebase", "developed",
                       "article", "video", "seen", "acknowledged"])

NAMES = ["graphkit", "nbody", "tracer", "qsim", "galaxyfit", "spectra", "lattice",
         "fluxmap", "orbitsim", "cellseg"]

URI_PATTERNS = {
    Label.OADS: [
        "gitlab.com/{name}/{name2}",
        "zenodo.org/record/{number}",
        "figshare.com/ndownloader/files/{number}",
        "osf.io/{name}{number}",
        "bitbucket.org/{name}/{name2}",
        "sourceforge.net/projects/{name}",
        "datadryad.org/stash/dataset/{number}",
        "codeocean.com/capsule/{number}",
        "huggingface.co/datasets/{name}/{name2}",
    ],
    Label.NON_OADS: [
        "www.youtube.com/watch?v={name}{number}",
        "vimeo.com/{number}",
        "en.wikipedia.org/wiki/{name}",
        "www.nytimes.com/2019/05/{number}/science/{name}.html",
        "twitter.com/{name}",
        "www.bbc.co.uk/news/{name}-{number}",
        "www.sciencenews.org/articles/{name}-{number}",
        "phys.org/news/{number}-{name}.html",
    ],
}


def make_synthetic_examples(per_label=100, seed=7):
    rng = random.Random(seed)
    examples = []
    for index in range(per_label):
        template = TEMPLATES[index % len(TEMPLATES)]
        scheme = "https" if index % 2 == 0 else "http"
        for label in (Label.OADS, Label.NON_OADS):
            words = WORDS[label]
            nouns = rng.sample(words['noun'], 2)
            uri = "{}://{}".format(scheme, rng.choice(URI_PATTERNS[label]).format(
                name=rng.choice(NAMES), name2=rng.choice(NAMES), number=rng.randint(10, 99999)))
            context = template.format(noun=nouns[0], noun2=nouns[1], verb=rng.choice(words['verb']), uri=uri)
            examples.append(LabeledExample(context[0].upper() + context[1:], uri, label))
    return examples


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def synthetic_examples():
    return make_synthetic_examples()


@pytest.fixture
def cue_words():
    return CUE_WORDS


@pytest.fixture(scope="session")
def synthetic_model():
    """trained once, shared read-only"""
    return train(make_synthetic_examples())


@pytest.fixture
def labeled_sentences():
    return read_labeled_examples(os.path.join(DATA_DIR, "labeled_sentences.tsv"))


@pytest.fixture
def clean_environment(monkeypatch):
    """no OADSMINE_ overrides from the calling shell"""
    for name in list(os.environ):
        if name.startswith("OADSMINE_"):
            monkeypatch.delenv(name)
    # root logging is configured by the script under test, not by an earlier test
    root = logging.getLogger()
    saved_handlers, saved_level = root.handlers[:], root.level
    yield
    for handler in root.handlers[:]:
        if handler not in saved_handlers:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(saved_level)
