"""Exception hierarchy for vnroles."""


class VNRolesError(Exception):
    """Base class for every error raised by this package."""


class MissingPath(VNRolesError, FileNotFoundError):
    pass


class MalformedXml(VNRolesError, ValueError):
    def __init__(self, filename, reason):
        super().__init__(f"{filename}: {reason}")
        self.filename = filename
        self.reason = reason


class DuplicateClassId(VNRolesError, ValueError):
    pass


class EmptyPath(VNRolesError, ValueError):
    pass


class UnknownRole(VNRolesError, KeyError):
    def __str__(self):
        # KeyError repr-quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class AlreadyVerbLevel(VNRolesError, ValueError):
    pass


class LengthMismatch(VNRolesError, ValueError):
    pass


class LevelMismatch(VNRolesError, ValueError):
    pass


class BadThreshold(VNRolesError, ValueError):
    pass


class EmptyManner(VNRolesError, ValueError):
    pass


class ParticipantMismatch(VNRolesError, ValueError):
    pass


class NoChange(VNRolesError, ValueError):
    pass
