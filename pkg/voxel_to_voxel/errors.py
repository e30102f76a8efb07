# Author: Simon Blanke
# Email: simon.blanke@yahoo.com
# License: MIT License


class V2VError(ValueError):
    pass


class DimensionError(V2VError):
    pass


class ShapeError(V2VError):
    pass


class FormatError(V2VError):
    pass


class LabelError(V2VError):
    pass


class DatasetError(V2VError):
    pass


class ConfigError(V2VError):
    pass


class SceneError(V2VError):
    pass
