"""Exception types raised across the package."""

from __future__ import annotations


class RdfPgError(Exception):
    """Base class for every error this package raises deliberately."""


class TurtleSyntaxError(RdfPgError):
    """Malformed Turtle input, with position and an expectation hint."""

    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        detail = f"expected {expected}"
        if found:
            detail += f", found {found}"
        super().__init__(f"line {line}, column {column}: {detail}")


class UnknownPrefix(RdfPgError):
    """A prefixed name uses a prefix with no @prefix binding."""

    def __init__(self, prefix: str, line: int = 0, column: int = 0):
        self.prefix = prefix
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: unknown prefix '{prefix}:'")


class BlankNodeUnsupported(RdfPgError):
    """Blank node syntax encountered outside the raw (skolemizing) parse mode."""

    def __init__(self, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(
            f"line {line}, column {column}: blank nodes are not supported; "
            "re-parse in raw mode and skolemize to convert them to IRIs"
        )


class MultipleTypes(RdfPgError):
    """A subject carries more than one type triple and no tie-break was requested."""

    def __init__(self, subject: str, classes: tuple[str, ...]):
        self.subject = subject
        self.classes = classes
        super().__init__(
            f"subject {subject} has {len(classes)} type declarations "
            f"({', '.join(classes)}); pass first_type='lexicographic' to tie-break"
        )


class ConflictingDomain(RdfPgError):
    def __init__(self, prop: str, domains: tuple[str, ...]):
        self.prop = prop
        self.domains = domains
        super().__init__(f"property {prop} declares multiple domains: {', '.join(domains)}")


class ConflictingRange(RdfPgError):
    def __init__(self, prop: str, ranges: tuple[str, ...]):
        self.prop = prop
        self.ranges = ranges
        super().__init__(f"property {prop} declares multiple ranges: {', '.join(ranges)}")


class ReservedVocabularyTerm(RdfPgError):
    """A schema element tried to use one of the reserved vocabulary IRIs."""

    def __init__(self, iri: str, where: str):
        self.iri = iri
        self.where = where
        super().__init__(f"{iri} is a reserved vocabulary term and cannot name a {where}")


class MissingEndpointType(RdfPgError):
    """A schema property references an endpoint class that maps to no node type."""

    def __init__(self, prop: str, endpoint: str, side: str):
        self.prop = prop
        self.endpoint = endpoint
        self.side = side
        super().__init__(
            f"property {prop}: {side} class {endpoint} is excluded from node types, "
            "so the property cannot be placed"
        )


class DuplicatePropertyLabel(RdfPgError):
    """One resource holds two values for the same datatype property.

    The schema-dependent instance mapping keys node properties by label, so
    multi-valued properties cannot be represented; the schema-independent
    mapping handles them.
    """

    def __init__(self, subject: str, label: str):
        self.subject = subject
        self.label = label
        super().__init__(
            f"resource {subject} has more than one value for {label}; "
            "use the schema-independent mapping for multi-valued properties"
        )


class MissingIriProperty(RdfPgError):
    def __init__(self, node: str):
        self.node = node
        super().__init__(f"node {node} has no single 'iri' property to recover its IRI from")


class NonIriLabel(RdfPgError):
    def __init__(self, element: str, label: str):
        self.element = element
        self.label = label
        super().__init__(f"{element} carries label {label!r}, which is not usable as an IRI")


class SchemaViolation(RdfPgError):
    """A property graph offered for inversion does not conform to the generic schema."""

    def __init__(self, summary: str):
        super().__init__(f"graph does not conform to the generic schema: {summary}")


class MissingRequiredProperty(RdfPgError):
    def __init__(self, element: str, label: str, count: int = 0):
        self.element = element
        self.label = label
        self.count = count
        what = "is missing" if count == 0 else f"has {count} copies of"
        super().__init__(f"{element} {what} required property {label!r}")


class FormatError(RdfPgError):
    """A JSON document does not match the expected layout."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class DanglingEdgeEndpoint(RdfPgError):
    def __init__(self, edge_id: str, node_id: str):
        self.edge_id = edge_id
        self.node_id = node_id
        super().__init__(f"edge {edge_id} references unknown node id {node_id}")


class AmbiguousCanonicalKey(RdfPgError):
    """Two distinct elements share a canonical key, so id-free comparison is undefined."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"two distinct nodes share the canonical key {key}")


class ValidityWarning(UserWarning):
    """Emitted when a mapping is applied to a database that fails validation."""
