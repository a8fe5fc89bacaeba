"""
hms export --what skeleton|dual|descent FAN.json
"""
from pathlib import Path

from torichms.console.command import Command
from torichms.console.commands.check_command import apply_placement
from torichms.hmscheck import export_dot
from torichms.support import Storage


class ExportCommand(Command):
    name = "export"
    description = "Write the glued skeleton, dual graph or descent diagram as DOT"
    signature = "export FAN.json --what skeleton|dual|descent [--out FILE.dot] [--placement auto|dumbbell]"
    options = frozenset({'what', 'out', 'placement'})

    async def handle(self, *args, **kwargs) -> int:
        self.require(args, 1)
        what = kwargs.get('what', 'skeleton')
        apply_placement(kwargs)
        fan = await self.load(args[0])
        dot = export_dot(fan, what)
        out = Storage.output(kwargs.get('out') or f"{Path(args[0]).stem}.{what}.dot", Storage.exports())
        written = await Storage.write_text(out, dot)
        self.success(f"{what} written to {written}")
        return 0
