"""
hms analyze FAN.json
"""
from torichms.console.command import Command
from torichms.hmscheck import analyze


class AnalyzeCommand(Command):
    name = "analyze"
    description = "Cone data and curve topology, no series"
    signature = "analyze FAN.json [--format text|json] [--out FILE]"
    options = frozenset({'format', 'out'})

    async def handle(self, *args, **kwargs) -> int:
        self.require(args, 1)
        report = analyze(await self.load(args[0]))
        if self.report_format(kwargs) == 'text':
            rows = [
                [check.name.split('.')[0], check.details['rms'], check.details['invariant_factors'],
                 check.details['sequence'], check.details['genus'], check.details['punctures']]
                for check in report.checks if check.name.endswith('.analysis')
            ]
            self.table(['cone', '(r,m,s)', 'G', '(m_i,r_i)', 'genus', 'punctures'], rows)
            self.line()
        return await self.emit(report, kwargs)
