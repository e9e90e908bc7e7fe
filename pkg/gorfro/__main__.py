from gorfro.cli.main import main

raise SystemExit(main())
