"""
hms crepant FAN1.json FAN2.json
"""
from torichms.console.command import Command
from torichms.hmscheck import crepant_compare


class CrepantCommand(Command):
    name = "crepant"
    description = "Compare two triangulations of the same polygon"
    signature = "crepant FAN1.json FAN2.json [--truncate N] [--format text|json] [--out FILE]"
    options = frozenset({'truncate', 'format', 'out'})

    async def handle(self, *args, **kwargs) -> int:
        self.require(args, 2)
        fan_a = await self.load(args[0])
        fan_b = await self.load(args[1])
        report = await crepant_compare(fan_a, fan_b, self.integer(kwargs, 'truncate'))
        return await self.emit(report, kwargs)
