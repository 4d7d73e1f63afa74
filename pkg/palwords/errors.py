class PalWordsError(Exception):
    def __init__(self, expression):
        super().__init__(expression)
        self.expression = expression


class ParseError(PalWordsError):
    def __init__(self, expression, index: int):
        super().__init__(expression)
        self.index = index


class UndefinedInputError(PalWordsError):
    pass


class AlphabetError(PalWordsError):
    pass


class PositionRangeError(PalWordsError):
    pass


class DimensionError(PalWordsError):
    pass


class ContractError(PalWordsError):
    pass


class GeneratorSetError(PalWordsError):
    pass


class DirectiveExhaustedError(PalWordsError):
    pass


class DescriptorError(PalWordsError):
    pass


class ResourceGuardError(PalWordsError):
    pass


class PydanticClassRequired(PalWordsError):
    pass
