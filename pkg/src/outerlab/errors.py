class InvalidInput(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class InvalidAutomorphism(InvalidInput):
    pass


class Infeasible(ValueError):
    """The thick-part constraints admit no point in the requested region."""


class ChainBroken(ValueError):
    def __init__(self, index, first, second):
        self.index = index
        self.pair = (first, second)
        super().__init__(f"consecutive pair {index}: {first!r}, {second!r} is not within distance 2")


class NoPrimitiveBasicClass(RuntimeError):
    pass
