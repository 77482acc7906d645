"""Exception types shared across the simulator."""


class MinesimError(Exception):
    """Base class for all simulator errors."""


class ChainError(MinesimError):
    """Invalid operation on the block tree or mempool."""


class UnknownParentError(ChainError):
    """Block references a parent that is not in the tree."""


class DuplicateBlockError(ChainError):
    """Block id already present in the tree."""


class UnknownTipError(ChainError):
    """Reorganization target is not a known block."""


class ConfigError(MinesimError):
    """Scenario configuration failed validation.

    `field` names the offending entry so CLI errors can point at it.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")
