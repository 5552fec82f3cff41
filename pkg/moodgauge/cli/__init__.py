from moodgauge.cli.commands.generate_config import generate_config
from moodgauge.cli.commands.main import main
from moodgauge.cli.commands.run import run
from moodgauge.cli.commands.validate import validate

main.add_command(generate_config)
main.add_command(run)
main.add_command(validate)
