"""
hms check FAN.json
"""
from torichms.console.command import Command
from torichms.defaults import PLACEMENTS
from torichms.hmscheck import check_global
from torichms.support import Config


def apply_placement(kwargs: dict) -> None:
    """--placement overrides hms.placement for this run"""
    placement = kwargs.get('placement')
    if placement is None:
        return
    Config.set('hms.placement', Config.choice('hms.placement', PLACEMENTS, placement))


class CheckCommand(Command):
    name = "check"
    description = "Run the affine suite on every cone and the global descent checks"
    signature = "check FAN.json [--truncate N] [--placement auto|dumbbell] [--format text|json] [--out FILE]"
    options = frozenset({'truncate', 'placement', 'format', 'out'})

    async def handle(self, *args, **kwargs) -> int:
        self.require(args, 1)
        apply_placement(kwargs)
        fan = await self.load(args[0])
        report = await check_global(fan, self.integer(kwargs, 'truncate'))
        return await self.emit(report, kwargs)
