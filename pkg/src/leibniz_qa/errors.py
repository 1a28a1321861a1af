"""Exception hierarchy shared by every module.

Every error names the offending input element so the CLI can surface it
verbatim.
"""


class LeibnizError(Exception):
    """Base class for all package errors."""


# linear algebra ------------------------------------------------------------

class MixedFields(LeibnizError):
    pass


class EmptyAmbient(LeibnizError):
    pass


class AmbientMismatch(LeibnizError):
    pass


class FieldCharTwo(LeibnizError):
    def __init__(self, msg="characteristic 2 is not supported"):
        super().__init__(msg)


class FieldMismatch(LeibnizError):
    pass


# algebras ------------------------------------------------------------------

class IndexOutOfRange(LeibnizError):
    pass


class DuplicateBracket(LeibnizError):
    pass


class NotAnIdeal(LeibnizError):
    def __init__(self, index=None, msg=None):
        self.index = index
        super().__init__(msg or f"term {index} is not a two-sided ideal")


class NoConvention(LeibnizError):
    pass


# lattices and primes -------------------------------------------------------

class NotFiniteField(LeibnizError):
    pass


class EnumerationTooLarge(LeibnizError):
    def __init__(self, work, guard):
        self.work = work
        self.guard = guard
        super().__init__(
            f"enumeration needs {work} principal closures, guard is {guard}")


class NotProper(LeibnizError):
    pass


# chains --------------------------------------------------------------------

class NotDescending(LeibnizError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"term {index} is not contained in term {index - 1}")


# lazy families -------------------------------------------------------------

class UnknownFamily(LeibnizError):
    pass


class UnknownRule(LeibnizError):
    pass


class BadParams(LeibnizError):
    pass


class BadDepth(LeibnizError):
    pass


# input grammar -------------------------------------------------------------

class AlgebraSyntaxError(LeibnizError):
    def __init__(self, line, msg):
        self.line = line
        super().__init__(f"line {line}: {msg}")


class DuplicateName(LeibnizError):
    pass
