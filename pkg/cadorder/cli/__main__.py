from cadorder.cli.main import main

main()
