"""Exception types raised across the package."""


class IntervalSatError(Exception):
    """Base class for all errors raised by this package."""


# ---- formula construction ----

class OutOfRangeLiteral(IntervalSatError):
    """A literal references a variable outside [1, n]."""


class TautologicalClause(IntervalSatError):
    """A clause contains both a variable and its negation."""


class WeightCountMismatch(IntervalSatError):
    """The weight list does not have one entry per clause."""


class PartialAssignment(IntervalSatError):
    """An assignment does not cover exactly the formula's variables."""


# ---- orderings ----

class OrderingMismatch(IntervalSatError):
    """A mixed ordering does not cover exactly the formula's elements."""


class UnknownClause(IntervalSatError):
    """A clause id does not exist in the formula."""


# ---- merging ----

class EmptyClause(IntervalSatError):
    """An operation received a clause with no literals."""


class EmptyClauseInMerge(EmptyClause):
    """Merging is undefined for empty clauses (low(c) does not exist)."""


# ---- expansion ----

class OverlapError(IntervalSatError):
    """Extra variables for expansion overlap the clause's own variables."""


# ---- solver ----

class CutOutOfRange(IntervalSatError):
    """Cut index outside [0, n+m]."""


class TooManyVariables(IntervalSatError):
    """Enumeration would exceed the configured variable cap."""


class TooManyInterleavings(IntervalSatError):
    """Exhaustive merge enumeration would exceed the configured cap."""


# ---- hardness generator ----

class InvalidInstance(IntervalSatError):
    """A 3-partition instance violates its size constraints."""


class NotASolution(IntervalSatError):
    """The proposed partition is not a valid 3-partition solution."""


class MissingInterval(IntervalSatError):
    """An interval representation does not cover every vertex."""


class InfeasibleParameters(IntervalSatError):
    """Random instance parameters are out of range."""


# ---- parsing ----

class ParseError(IntervalSatError):
    """Base class for input format errors."""


class MalformedHeader(ParseError):
    """The DIMACS problem line is missing or malformed."""


class ClauseCountMismatch(ParseError):
    """The number of clauses differs from the header's declaration."""


class ZeroWeight(ParseError):
    """A wcnf clause carries weight zero."""


class NotAPermutation(ParseError):
    """An order line is not a permutation of the expected ids."""


class MissingLine(ParseError):
    """An expected input line is absent."""


class DuplicateElement(ParseError):
    """A mixed ordering lists some element twice."""


class MissingElement(ParseError):
    """A mixed ordering does not list every element."""


class UnknownToken(ParseError):
    """A token does not name a variable or clause of the formula."""


# Range violations found while parsing are the same condition as in
# formula construction; keep one class under both names.
LiteralOutOfRange = OutOfRangeLiteral
