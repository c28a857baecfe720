#! /usr/bin/env python3

# standard modules
import os
import sys
import logging
import argparse
import traceback
import dataclasses

# self-defined modules
from oadsmine.shared.stdscript import StandardScript, ENV_PREFIX, typed_value
from oadsmine.shared.errors import ConfigError, OadsMineError
from oadsmine.shared.filestorage import write_json
from oadsmine.corpus.manifest import CorpusWindow
from oadsmine.extraction.mentionfile import iter_mentions, read_meta
from oadsmine.scope.scopefilter import ScopePolicy
from oadsmine.classifier.labels import read_labeled_examples
from oadsmine.classifier.heuristic import Denylist
from oadsmine.classifier.linearmodel import TrainingConfig, TrainedModel, train
from oadsmine.classifier.evaluation import evaluate, cross_validate
from oadsmine.ghp.ghpdetect import Category, CategoryPolicy, GhpPatternSet
from oadsmine.analytics.corpusstats import CorpusStats
from oadsmine.analytics.hostnames import dispersion_metrics, distinct_hostnames
from oadsmine.analytics.csvreport import CsvEncoder
from oadsmine.cli.stages import Assessor, aggregate, run_extraction


usage = """\
Usage: {name} COMMAND [--config FILE] [--log-level LEVEL] [--workers N] [options]

Mines URIs from a corpus of scholarly full texts and reports how many of
them point to open-access data and software (OADS).

Commands:
  extract    extract URI mentions with their context sentences
  train      train the context classifier on a labeled file
  evaluate   evaluate a model on a labeled file, or cross-validate with --folds
  report     classify, scope filter and aggregate a mentions file into CSV reports
  pipeline   extract and report in one run

Every configuration value can also be set in the environment as
{prefix}<SECTION>_<KEY>, e.g. {prefix}RUN_WORKERS=8.
"""

RUN_META_FILE = "run_meta.json"
OUT_OF_SCOPE = "OutOfScope"

# command-line destination -> configuration section and key
OVERRIDES = {
    "manifest": ("CORPUS", "manifest"),
    "window_start": ("CORPUS", "window_start"),
    "window_end": ("CORPUS", "window_end"),
    "mentions": ("EXTRACTION", "mentions_file"),
    "dedup_per_doc": ("EXTRACTION", "dedup_per_doc"),
    "policy": ("SCOPE", "policy_file"),
    "denylist": ("CLASSIFIER", "denylist_file"),
    "model": ("CLASSIFIER", "model_file"),
    "labeled": ("CLASSIFIER", "labeled_file"),
    "threshold": ("CLASSIFIER", "threshold"),
    "seed": ("TRAINING", "seed"),
    "patterns": ("GHP", "pattern_file"),
    "category_policy": ("GHP", "category_policy"),
    "bin_width": ("ANALYTICS", "bin_width"),
    "top_n": ("ANALYTICS", "top_n"),
    "output_dir": ("RUN", "output_dir"),
    "workers": ("RUN", "workers"),
    "log_level": ("LOGGING", "log_level_console"),
    "log_dir": ("LOGGING", "log_dir"),
}

# files each command reads
REQUIRED_FILES = {
    "extract": ("manifest",),
    "train": ("labeled_file",),
    "evaluate": ("labeled_file",),
    "report": ("mentions_file", "model_file"),
    "pipeline": ("manifest", "model_file"),
}
OPTIONAL_FILES = ("policy_file", "denylist_file", "pattern_file")


@dataclasses.dataclass(frozen=True)
class RunConfig:
    manifest: str
    output_dir: str
    mentions_file: str
    policy_file: str
    denylist_file: str
    model_file: str
    labeled_file: str
    pattern_file: str
    category_policy: CategoryPolicy
    dedup_per_doc: bool
    bin_width: int
    top_n: int
    seed: int
    workers: int
    window: CorpusWindow

    @classmethod
    def from_config(cls, config):
        output_dir = config['RUN']['output_dir']
        try:
            category_policy = CategoryPolicy(config['GHP']['category_policy'])
            window = CorpusWindow.from_config(config)
        except ValueError as exc:
            raise ConfigError(str(exc))
        run_config = cls(
            manifest=config['CORPUS']['manifest'],
            output_dir=output_dir,
            mentions_file=config['EXTRACTION']['mentions_file'] or os.path.join(output_dir, "mentions.tsv"),
            policy_file=config['SCOPE']['policy_file'],
            denylist_file=config['CLASSIFIER']['denylist_file'],
            model_file=config['CLASSIFIER']['model_file'] or os.path.join(output_dir, "model.json"),
            labeled_file=config['CLASSIFIER']['labeled_file'],
            pattern_file=config['GHP']['pattern_file'],
            category_policy=category_policy,
            dedup_per_doc=typed_value(config, 'EXTRACTION', 'dedup_per_doc', bool),
            bin_width=typed_value(config, 'ANALYTICS', 'bin_width', int),
            top_n=typed_value(config, 'ANALYTICS', 'top_n', int),
            seed=typed_value(config, 'TRAINING', 'seed', int),
            workers=typed_value(config, 'RUN', 'workers', int),
            window=window,
        )
        if run_config.bin_width < 1 or run_config.top_n < 1 or run_config.workers < 1:
            raise ConfigError("bin width, top n and workers must be positive")
        return run_config

    def validate(self, command, required=None):
        """every file the command reads must exist before any work starts"""
        for name in REQUIRED_FILES[command] if required is None else required:
            path = getattr(self, name)
            if not path:
                raise ConfigError("{} is required for {}".format(name, command))
            if not os.path.isfile(path):
                raise ConfigError("{} {} not found".format(name, path))
        for name in OPTIONAL_FILES:
            path = getattr(self, name)
            if path and not os.path.isfile(path):
                raise ConfigError("{} {} not found".format(name, path))

    def as_dict(self):
        data = dataclasses.asdict(self)
        data['category_policy'] = self.category_policy.value
        data['window'] = {"start": str(self.window.start), "end": str(self.window.end)}
        return data


class OadsMine(StandardScript):
    def __init__(self, config_file=None, overrides=None, environ=None):
        # call parent constructor
        super().__init__(config_file, overrides, environ)
        self.run_config = RunConfig.from_config(self.config)

    def process(self, command, folds=None):
        try:
            if command == "evaluate" and folds is None and \
                    self.config['CLASSIFIER']['model_file'] is not None:
                self.run_config.validate(command, ("labeled_file", "model_file"))
            else:
                self.run_config.validate(command)
            logging.getLogger().info("running {}".format(command))
            if command == "extract":
                return self.cmd_extract()
            if command == "train":
                return self.cmd_train()
            if command == "evaluate":
                return self.cmd_evaluate(folds)
            if command == "report":
                return self.cmd_report()
            return self.cmd_pipeline()
        except OadsMineError:
            logging.getLogger().debug(traceback.format_exc())
            raise
        except Exception:
            logging.getLogger().error(traceback.format_exc())
            raise

    def cmd_extract(self):
        rc = self.run_config
        summary = run_extraction(rc.manifest, rc.mentions_file, rc.window, rc.dedup_per_doc, rc.workers,
                                 rc.as_dict(), rc.seed)
        return rc.mentions_file, summary

    def training_config(self):
        return TrainingConfig.from_config(self.config)

    def cmd_train(self):
        examples = read_labeled_examples(self.run_config.labeled_file)
        model = train(examples, self.training_config(), self.config['FEATURIZER'])
        model.save(self.run_config.model_file)
        logging.getLogger().info("model written to {}".format(self.run_config.model_file))
        metrics = evaluate(model, examples)
        print("training data\n" + metrics.summary())
        return model, metrics

    def cmd_evaluate(self, folds=None):
        examples = read_labeled_examples(self.run_config.labeled_file)
        if folds is None and self.config['CLASSIFIER']['model_file'] is not None:
            metrics = evaluate(TrainedModel.load(self.run_config.model_file), examples)
            print(metrics.summary())
            return metrics

        folds = folds or typed_value(self.config, 'TRAINING', 'folds', int)
        result = cross_validate(examples, self.training_config(), self.config['FEATURIZER'], folds)
        print("{}-fold cross-validation, mean fold accuracy {:.4f}\n{}".format(
            folds, result.mean_accuracy, result.metrics.summary()))
        return result

    def assessor(self):
        rc = self.run_config
        return Assessor(
            model=TrainedModel.load(rc.model_file),
            denylist=Denylist.load(rc.denylist_file),
            policy=ScopePolicy.load(rc.policy_file),
            patterns=GhpPatternSet.load(rc.pattern_file),
            category_policy=rc.category_policy,
        )

    def cmd_report(self):
        rc = self.run_config
        assessor = self.assessor()
        meta = read_meta(rc.mentions_file)

        template = CorpusStats(rc.bin_width, rc.category_policy, rc.window)
        stats = aggregate(iter_mentions(rc.mentions_file), meta['publications'], assessor, template, rc.workers)
        outputs = CsvEncoder(rc.output_dir).write_all(stats, rc.top_n)

        # every mention gets exactly one scope verdict
        mention_count = sum(stats.scope_reasons.values())
        run_meta = self.run_metadata(stats, meta, mention_count, outputs)
        write_json(os.path.join(rc.output_dir, RUN_META_FILE), run_meta)
        totals = run_meta['categories']
        logging.getLogger().info("report: {} mention(s), {} GHP, {} non-GHP OADS, {} NonOADS, {} out of scope".format(
            mention_count, totals['GHP'], totals['NonGhpOADS'], totals['NonOADS'], totals[OUT_OF_SCOPE]))
        return stats, run_meta

    def cmd_pipeline(self):
        self.cmd_extract()
        return self.cmd_report()

    def run_metadata(self, stats, extract_meta, mention_count, outputs):
        totals = stats.totals()
        dispersion = dispersion_metrics(stats.hostnames)
        return {
            "config": self.run_config.as_dict(),
            "seed": self.run_config.seed,
            "corpus": extract_meta['corpus'],
            "mentions": mention_count,
            "provenance": dict(stats.provenance),
            "scope": dict(stats.scope_reasons),
            "categories": {
                Category.GHP.value: totals.ghp,
                Category.NON_GHP_OADS.value: totals.non_ghp_oads,
                Category.NON_OADS.value: totals.non_oads,
                OUT_OF_SCOPE: mention_count - totals.uri_total,
            },
            "totals": totals.counts(),
            "platforms": dict(stats.platforms),
            "distinct_hostnames": distinct_hostnames(stats.hostnames),
            "dispersion": None if dispersion is None else dataclasses.asdict(dispersion),
            "seeds": len(stats.seeds),
            "outputs": [os.path.basename(path) for path in outputs],
        }


class ArgumentParser(argparse.ArgumentParser):
    # usage errors share the exit code of configuration errors
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "{}: error: {}\n".format(self.prog, message))


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--log-level", choices=["debug", "info", "warning", "error"])
    common.add_argument("--log-dir")
    common.add_argument("--workers", type=int)
    common.add_argument("--output-dir")

    corpus = ArgumentParser(add_help=False)
    corpus.add_argument("--manifest")
    corpus.add_argument("--window-start", help="first month, YYYY-MM")
    corpus.add_argument("--window-end", help="last month, YYYY-MM")
    corpus.add_argument("--mentions", help="mentions file")
    corpus.add_argument("--dedup-per-doc", action="store_const", const=True, default=None,
                        help="count each URI once per document")

    training = ArgumentParser(add_help=False)
    training.add_argument("--labeled", help="labeled file: label, uri, context per line")
    training.add_argument("--model", help="model file")
    training.add_argument("--seed", type=int)
    training.add_argument("--threshold", type=float)

    report = ArgumentParser(add_help=False)
    report.add_argument("--model", help="model file")
    report.add_argument("--policy", help="scope policy file")
    report.add_argument("--denylist", help="publisher denylist file")
    report.add_argument("--patterns", help="GHP pattern file")
    report.add_argument("--category-policy", choices=[policy.value for policy in CategoryPolicy])
    report.add_argument("--bin-width", type=int)
    report.add_argument("--top-n", type=int)
    report.add_argument("--seed", type=int)

    # shared options belong to the subcommands, a subparser default would mask a top-level value
    parser = ArgumentParser(prog="oadsmine",
                            description="URI mining for open-access data and software")
    commands = parser.add_subparsers(dest="command")
    commands.add_parser("extract", parents=[common, corpus], help="extract URI mentions")
    commands.add_parser("train", parents=[common, training], help="train the context classifier")
    evaluate_parser = commands.add_parser("evaluate", parents=[common, training], help="evaluate a model")
    evaluate_parser.add_argument("--folds", type=int, help="cross-validate with this many folds")
    report_parser = commands.add_parser("report", parents=[common, report], help="aggregate a mentions file")
    report_parser.add_argument("--mentions", help="mentions file")
    report_parser.add_argument("--window-start", help="first month, YYYY-MM")
    report_parser.add_argument("--window-end", help="last month, YYYY-MM")
    commands.add_parser("pipeline", parents=[common, corpus, report], help="extract and report")
    return parser


def overrides_from(args):
    overrides = {}
    for dest, (section, key) in OVERRIDES.items():
        value = getattr(args, dest, None)
        if value is not None:
            overrides.setdefault(section, {})[key] = value
    return overrides


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        print(usage.format(name="oadsmine", prefix=ENV_PREFIX))
        return 1

    try:
        oadsmine = OadsMine(args.config, overrides_from(args))
        oadsmine.process(args.command, getattr(args, "folds", None))
    except OadsMineError as exc:
        logging.getLogger().error(str(exc))
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
