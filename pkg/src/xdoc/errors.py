"""Exception types shared across the package."""


class XdocError(Exception):
    """Base class for all errors raised by this package."""


class EmptyDocument(XdocError):
    """An empty document was handed to the corpus or a builder."""


class SentinelInText(XdocError):
    """A document contains byte 0, which is reserved as the internal terminator."""


class UnknownDocument(XdocError):
    """A document id does not resolve to a stored document."""


class OutOfRange(XdocError):
    """Substring coordinates leave the document."""


class InvalidSubstring(XdocError):
    """A query carries substring coordinates that do not denote a substring."""


class RankOutOfRange(XdocError):
    """A suffix rank lies outside the valid range."""


class NodeNotInTree(XdocError):
    """A node handle does not belong to the tree it was used with."""


class AnchorNotInList(XdocError):
    """An insertion anchor does not belong to the list it was used with."""


class ElementNotInList(XdocError):
    """An order query names an element from a different list."""


class OrderViolation(XdocError):
    """A range query received its endpoints in reverse order."""
