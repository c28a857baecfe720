"""Sparse features for the learned classifier.

Context words are lowercased token counts with every URI in the sentence
replaced by a mask token. URI lexical features are the host, registered
domain and public suffix tokens (vocabulary entries) plus a fixed block of
flags (scheme, query, empty path, path keywords) that every model carries
at the end of its weight vector.
"""

# standard modules
import re
import collections

# self-defined modules
from oadsmine.shared.errors import UriParseError
from oadsmine.shared.stdscript import template_config
from oadsmine.scope.uriparts import SUFFIX_EXTRACTOR, parse_uri
from oadsmine.extraction.urimatcher import substitute_uris


WORD_RE = re.compile(r"\w+")
PATH_TOKEN_RE = re.compile(r"[a-z0-9]+")


def default_featurizer_config():
    """the FEATURIZER section of the configuration template"""
    return dict(template_config()['FEATURIZER'])


class Featurizer():
    def __init__(self, config=None):
        self.config = default_featurizer_config()
        if config:
            self.config.update(config)
        self.flag_names = ["uri:https", "uri:query", "uri:empty_path"] + \
            ["uri:kw:" + keyword for keyword in self.config['path_keywords']]

    def context_features(self, context):
        features = collections.Counter()
        if not context:
            return features
        mask = " {} ".format(self.config['mask_token'])
        masked = substitute_uris(context, lambda raw: mask)
        if self.config['lowercase']:
            masked = masked.lower()
        for token in WORD_RE.findall(masked):
            features["w:" + token] += 1
        return features

    def uri_features(self, uri):
        features = collections.Counter()
        try:
            parts = parse_uri(uri)
        except UriParseError:
            return features

        if self.config['host_features']:
            features["host:" + parts.host] = 1
        if not parts.is_ipv6 and (self.config['domain_features'] or self.config['tld_features']):
            extracted = SUFFIX_EXTRACTOR(parts.host)
            if self.config['domain_features'] and extracted.domain and extracted.suffix:
                features["domain:{}.{}".format(extracted.domain, extracted.suffix)] = 1
            if self.config['tld_features'] and extracted.suffix:
                features["tld:" + extracted.suffix] = 1

        # fixed flag block
        if parts.scheme == "https":
            features["uri:https"] = 1
        if parts.query:
            features["uri:query"] = 1
        if parts.path in ("", "/"):
            features["uri:empty_path"] = 1
        path_tokens = set(PATH_TOKEN_RE.findall(parts.path.lower()))
        for keyword in self.config['path_keywords']:
            if keyword in path_tokens:
                features["uri:kw:" + keyword] = 1
        return features

    def featurize(self, context, uri):
        """feature name -> count; identical input always gives the identical mapping"""
        features = self.context_features(context)
        features.update(self.uri_features(uri))
        return dict(features)
