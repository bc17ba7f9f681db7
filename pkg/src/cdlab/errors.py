"""Exception hierarchy."""


class CdlabError(Exception):
    pass


class GroupValidationError(CdlabError, ValueError):
    """A multiplication table failed one of the group axioms."""


class NotClosed(GroupValidationError):
    pass


class NoIdentity(GroupValidationError):
    pass


class NotAssociative(GroupValidationError):
    pass


class NoInverse(GroupValidationError):
    pass


class OrderLimitExceeded(CdlabError):
    def __init__(self, limit: int, order: int | None = None):
        self.limit = limit
        self.order = order
        what = f"order {order}" if order is not None else "group order"
        super().__init__(f"{what} exceeds the configured limit {limit}")


class NotNormal(CdlabError, ValueError):
    pass


class UnknownFamily(CdlabError, ValueError):
    pass


class BadParameter(CdlabError, ValueError):
    pass


class SubgroupBudgetExceeded(CdlabError):
    """Enumeration would pass a budget.

    ``joins`` is set when the join budget, not the count budget, ran out.
    """

    def __init__(self, count: int, budget: int, projected: bool = False, joins: int | None = None):
        self.count = count
        self.budget = budget
        self.projected = projected
        self.joins = joins
        kind = "projected subgroup count" if projected else "subgroup count"
        if joins is None:
            msg = f"{kind} {count} exceeds the budget {budget}"
        else:
            msg = f"{kind} {count} needs {joins} joins, over the join budget {budget}"
        super().__init__(msg)


class NotPGroup(CdlabError, ValueError):
    pass


class LatticeViolation(CdlabError):
    """The CD-subgroups failed to form a lattice with unique top and bottom.

    ``pair`` holds the two offending subgroups. Raising this on a real group
    would contradict a published theorem, so it should never fire.
    """

    def __init__(self, message: str, pair=None):
        self.pair = pair
        super().__init__(message)


class ParseError(CdlabError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
