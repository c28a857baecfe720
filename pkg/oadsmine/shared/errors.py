"""Exception hierarchy of the pipeline.

Command-line exit codes follow the exception class: ConfigError maps to 1,
every DataError to 2.
"""


class OadsMineError(Exception):
    exit_code = 2


class ConfigError(OadsMineError):
    exit_code = 1


class DataError(OadsMineError):
    exit_code = 2


class ManifestError(DataError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = "line {}: {}".format(line_number, message)
        super().__init__(message)
        self.line_number = line_number


class DocumentReadError(DataError):
    def __init__(self, doc_id, reason):
        super().__init__("cannot read document {}: {}".format(doc_id, reason))
        self.doc_id = doc_id


class LabeledDataError(DataError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = "line {}: {}".format(line_number, message)
        super().__init__(message)
        self.line_number = line_number


class TrainingError(DataError):
    pass


class ModelFormatError(DataError):
    pass


class UriParseError(DataError, ValueError):
    def __init__(self, uri, reason):
        super().__init__("cannot parse URI {!r}: {}".format(uri, reason))
        self.uri = uri


class StatsMismatchError(DataError):
    pass
