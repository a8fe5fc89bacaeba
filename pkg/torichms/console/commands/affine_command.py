"""
hms affine --r R --m M --s S
"""
from torichms.console.command import Command
from torichms.exceptions import InputException
from torichms.hmscheck import check_affine
from torichms.toricdata.cone import normal_form_of


class AffineCommand(Command):
    name = "affine"
    description = "Compare both sides on the single cone C^3/G(r, m, s)"
    signature = "affine --r R --m M --s S [--truncate N] [--format text|json] [--out FILE]"
    options = frozenset({'r', 'm', 's', 'truncate', 'format', 'out'})

    async def handle(self, *args, **kwargs) -> int:
        r, m, s = (self.integer(kwargs, key) for key in ('r', 'm', 's'))
        if None in (r, m, s):
            raise InputException(f"usage: hms {self.signature}")
        report = check_affine(normal_form_of(r, m, s), self.integer(kwargs, 'truncate'))
        return await self.emit(report, kwargs)
