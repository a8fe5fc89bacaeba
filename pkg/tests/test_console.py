"""
hms command line
"""
import json

import pytest

from conftest import fixture_path
from torichms.console import Artisan
from torichms.defaults import EXIT_INPUT_ERROR, EXIT_PASS
from torichms.support import Config, Storage


@pytest.fixture
def artisan() -> Artisan:
    return Artisan()


class TestDiscovery:
    def test_commands_are_registered(self, artisan):
        assert sorted(artisan.commands) == ['affine', 'analyze', 'check', 'crepant', 'export']

    async def test_help(self, artisan, capsys):
        assert await artisan.run(['hms']) == 0
        assert 'COMMANDS:' in capsys.readouterr().out
        assert await artisan.run(['hms', 'help', 'check']) == 0
        assert 'Signature: hms check FAN.json' in capsys.readouterr().out

    async def test_unknown_command(self, artisan):
        assert await artisan.run(['hms', 'prove']) == EXIT_INPUT_ERROR
        assert await artisan.run(['hms', 'help', 'prove']) == EXIT_INPUT_ERROR


class TestArgumentParsing:
    def test_value_options_and_flags(self, artisan):
        command = artisan.commands['check']
        args, kwargs = artisan._parse_args(
            command, ['fan.json', '--truncate', '12', '--format=json', '--verbose', '--placement', 'auto'],
        )
        assert args == ['fan.json']
        assert kwargs == {'truncate': 12, 'format': 'json', 'verbose': True, 'placement': 'auto'}

    def test_booleans_are_coerced(self, artisan):
        _, kwargs = artisan._parse_args(artisan.commands['analyze'], ['--dry=false'])
        assert kwargs == {'dry': False}

    def test_flag_at_the_end(self, artisan):
        _, kwargs = artisan._parse_args(artisan.commands['affine'], ['--r'])
        assert kwargs == {'r': True}


class TestAffineCommand:
    async def test_passes(self, artisan, capsys):
        code = await artisan.run(['hms', 'affine', '--r', '3', '--m', '1', '--s', '1', '--truncate', '6'])
        assert code == EXIT_PASS
        assert 'result: PASS' in capsys.readouterr().out

    async def test_json_to_file(self, artisan, tmp_path):
        out = tmp_path / 'affine.json'
        code = await artisan.run([
            'hms', 'affine', '--r=2', '--m=2', '--s=1', '--truncate=5', '--format=json', f'--out={out}',
        ])
        assert code == EXIT_PASS
        document = json.loads(out.read_text(encoding='utf-8'))
        assert document['input'] == {'rms': [2, 2, 1], 'truncate': 5}

    async def test_bare_out_name_goes_to_reports(self, artisan):
        code = await artisan.run(['hms', 'affine', '--r=1', '--m=1', '--s=0', '--truncate=3', '--out=trivial.txt'])
        assert code == EXIT_PASS
        assert 'result: PASS' in Storage.reports('trivial.txt').read_text(encoding='utf-8')

    async def test_negative_truncation(self, artisan):
        code = await artisan.run(['hms', 'affine', '--r=1', '--m=1', '--s=0', '--truncate=-1'])
        assert code == EXIT_INPUT_ERROR

    async def test_missing_parameter(self, artisan):
        assert await artisan.run(['hms', 'affine', '--r=1', '--m=1']) == EXIT_INPUT_ERROR

    async def test_degenerate_parameters(self, artisan):
        assert await artisan.run(['hms', 'affine', '--r=2', '--m=1', '--s=2']) == EXIT_INPUT_ERROR


class TestFanCommands:
    async def test_check_json(self, artisan, capsys):
        code = await artisan.run(['hms', 'check', str(fixture_path('square_a')), '--truncate', '6', '--format', 'json'])
        assert code == EXIT_PASS
        document = json.loads(capsys.readouterr().out)
        assert document['topology'] == {'chi': -2, 'genus': 0, 'punctures': 4}

    async def test_check_missing_file(self, artisan):
        assert await artisan.run(['hms', 'check', 'missing.json']) == EXIT_INPUT_ERROR

    async def test_check_unknown_placement(self, artisan):
        code = await artisan.run(['hms', 'check', str(fixture_path('square_a')), '--placement', 'spiral'])
        assert code == EXIT_INPUT_ERROR

    async def test_check_sets_placement(self, artisan):
        await artisan.run(['hms', 'check', str(fixture_path('square_a')), '--truncate=4', '--placement=dumbbell'])
        assert Config.get('hms.placement') == 'dumbbell'

    async def test_crepant(self, artisan):
        code = await artisan.run([
            'hms', 'crepant', str(fixture_path('kp2_coarse')), str(fixture_path('kp2_fine')), '--truncate=4',
        ])
        assert code == EXIT_PASS

    async def test_crepant_needs_two_fans(self, artisan):
        assert await artisan.run(['hms', 'crepant', str(fixture_path('kp2_fine'))]) == EXIT_INPUT_ERROR

    async def test_export_default_location(self, artisan):
        code = await artisan.run(['hms', 'export', str(fixture_path('square_a')), '--what', 'dual'])
        assert code == EXIT_PASS
        written = Storage.exports('square_a.dual.dot')
        assert written.read_text(encoding='utf-8').startswith('graph "dual" {')

    async def test_export_unknown_target(self, artisan):
        code = await artisan.run(['hms', 'export', str(fixture_path('square_a')), '--what', 'picture'])
        assert code == EXIT_INPUT_ERROR

    async def test_analyze_table(self, artisan, capsys):
        assert await artisan.run(['hms', 'analyze', str(fixture_path('orbifold_strip'))]) == EXIT_PASS
        out = capsys.readouterr().out
        assert '(r,m,s)' in out
        assert 'genus=0' in out
